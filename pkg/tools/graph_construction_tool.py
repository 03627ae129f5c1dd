"""
@description: MCP tool for closing graphs, building [G] and searching proper interval orderings.
             Every handler takes graph file text ("graph <n>" followed by "u v" lines) and returns the JSON report.
"""
from core.foundation.tools import ReportTool


class GraphConstructionTool(ReportTool):

    def register_tool(self) -> None:
        """
        Register close, construct and pi_order with the MCP server.
        :return: None
        """

        @self.get_mcp().tool(
            name=f"{self.tool_mcp_path_prefix}.close",
            title=f"{self.tool_mcp_path_prefix}.close",
            description="Least supergraph closed under the chosen labeling, with the trace of forced edges.",
        )
        async def close(text: str, labeling: str = "identity") -> dict:
            return self.run_report("close", text, labeling)

        @self.get_mcp().tool(
            name=f"{self.tool_mcp_path_prefix}.construct",
            title=f"{self.tool_mcp_path_prefix}.construct",
            description="Closed Cohen-Macaulay supergraph [G] with its construction trace, verdicts and minimal primes.",
        )
        async def construct(text: str, labeling: str = "identity") -> dict:
            return self.run_report("construct", text, labeling)

        @self.get_mcp().tool(
            name=f"{self.tool_mcp_path_prefix}.pi_order",
            title=f"{self.tool_mcp_path_prefix}.pi_order",
            description="Search a labeling under which the graph is closed (FOUND, CERTIFIED_NONE or UNKNOWN).",
        )
        async def pi_order(text: str) -> dict:
            return self.run_report("pi-order", text)
