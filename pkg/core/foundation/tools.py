from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Optional

from fastmcp import FastMCP
from fastmcp.exceptions import ToolError

from cli.commands import RunOptions, execute
from core.foundation.errors import CMClosureError
from core.foundation.models.trace_model import LabelingStrategyEnum
from core.utils.encoders.transport_encoder import transportify
from core.utils.log import get_logger


class MCPTool(ABC):
    def __init__(self, mcp_server: FastMCP):
        self._mcp = mcp_server
        self.tool_mcp_path_prefix = f"{self._mcp.name}.{self.__class__.__name__}"

    def get_mcp(self) -> FastMCP:
        return self._mcp

    async def _get_capabilities(self) -> dict:
        mcp = self.get_mcp()
        tools = await mcp.get_tools()
        return {
            "name": mcp.name,
            "tools": sorted(name for name in tools if name.startswith(self.tool_mcp_path_prefix)),
        }

    async def get_capabilities(self) -> dict:
        return await self._get_capabilities()

    @abstractmethod
    def register_tool(self) -> None:
        ...


class ReportTool(MCPTool, ABC):
    """MCP tool whose handlers run a report command on graph or clutter text."""

    def __init__(self, mcp_server: FastMCP, options: Optional[RunOptions] = None):
        MCPTool.__init__(self, mcp_server)
        self._options = options or RunOptions()
        self._logger = get_logger(self.__class__.__name__)

    def run_report(self, command: str, text: str, labeling: str = "identity") -> dict:
        """
        Run ``command`` and return the JSON report; toolkit errors become tool errors for the client.
        :param labeling: one of identity, bfs, exhaustive-min
        """
        try:
            options = self._options.model_copy(update={"labeling": LabelingStrategyEnum(labeling)})
            return transportify(execute(command, text, options))
        except ValueError as e:
            # InputError is a ValueError too
            self._logger.warning("%s rejected: %s", command, e)
            raise ToolError(str(e)) from e
        except CMClosureError as e:
            self._logger.warning("%s failed: %s", command, e)
            raise ToolError(str(e)) from e
