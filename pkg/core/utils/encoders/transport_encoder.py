"""
@description: Transport-safe serializer for reports. Pydantic models, mappings, sets, enums and tuples are turned
             into plain JSON types with a deterministic layout: sets are sorted, enums become their values.
"""
from __future__ import annotations

import json
from enum import Enum
from typing import Any, Iterable, Mapping


class TransportEncoder:
    """
    Serializer for Pydantic v2 models, dicts, lists, sets and primitives.

    - Enums are emitted by value.
    - Sets and frozensets are emitted as sorted lists so identical inputs give byte-identical JSON.
    """

    def to_dict(self, obj: Any) -> Any:
        if obj is None or isinstance(obj, (str, bool, int, float)):
            return obj

        if isinstance(obj, Enum):
            return self.to_dict(obj.value)

        if hasattr(obj, "model_dump"):
            return self._visit_mapping(obj.model_dump(mode="python"))

        if isinstance(obj, Mapping):
            return self._visit_mapping(obj)

        if isinstance(obj, (set, frozenset)):
            items = [self.to_dict(x) for x in obj]
            try:
                return sorted(items)
            except TypeError:
                return sorted(items, key=lambda x: json.dumps(x, sort_keys=True))

        if isinstance(obj, Iterable):
            return [self.to_dict(x) for x in obj]

        return str(obj)

    def _visit_mapping(self, mapping: Mapping[Any, Any]) -> dict:
        return {(k.value if isinstance(k, Enum) else str(k)): self.to_dict(v) for k, v in mapping.items()}


def transportify(obj: Any) -> Any:
    """Serialize any object into a transport-safe structure (dict/list/primitives)."""
    return TransportEncoder().to_dict(obj)
