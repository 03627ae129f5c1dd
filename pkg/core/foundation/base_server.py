from __future__ import annotations

from fastmcp import FastMCP

from core.foundation.tools import MCPTool
from core.utils.log import get_logger

logger = get_logger(__name__)


class BaseServer:
    def __init__(self, host: str, port: int, name: str = "MCP Server", load_system_tools: bool = True):
        self._host: str = host
        self._port: int = port
        self._mcp_server: FastMCP = FastMCP(name)
        self._tools: list[MCPTool] = []

        # capabilities listing
        if load_system_tools:
            self.register_system_tools()

    def load_default_tools(self, tools: list[MCPTool]):
        self._tools.extend(tools)

    def register_tools(self):
        for tool in self._tools:
            tool.register_tool()
            logger.info("registered %s", tool.__class__.__name__)

    def register_system_tools(self) -> None:
        @self._mcp_server.tool(
            title="get_capabilities",
            description="Get the capabilities of the MCP server and its tools",
            tags={"tool", "mcp", "capabilities"},
            name="get_capabilities")
        async def get_capabilities() -> dict:
            capabilities = {"tools": {}}
            for tool in self._tools:
                capabilities["tools"][tool.__class__.__name__] = await tool.get_capabilities()
            return capabilities

    def run(self):
        logger.info("serving %s on %s:%d", self._mcp_server.name, self._host, self._port)
        self._mcp_server.run(transport="http", host=self._host, port=self._port)

    def get(self) -> FastMCP:
        return self._mcp_server
