from pydantic import BaseModel, ConfigDict


class StrictModel(BaseModel):
    model_config = ConfigDict(extra='forbid')


class FrozenModel(StrictModel):
    """Immutable value model; hashable and safe to hand to worker processes."""
    model_config = ConfigDict(extra='forbid', frozen=True)
