from core.foundation.tools import ReportTool


class IdealOracleTool(ReportTool):
    """Cut-point sets, minimal primes and unmixed/CM verdicts, plus the vertex-deletion audit."""

    def register_tool(self) -> None:

        @self.get_mcp().tool(
            name=f"{self.tool_mcp_path_prefix}.oracle",
            title=f"{self.tool_mcp_path_prefix}.oracle",
            description="Minimal primes with heights, unmixedness and Cohen-Macaulay status of a graph.",
        )
        async def oracle(text: str, labeling: str = "identity") -> dict:
            return self.run_report("oracle", text, labeling)

        @self.get_mcp().tool(
            name=f"{self.tool_mcp_path_prefix}.audit",
            title=f"{self.tool_mcp_path_prefix}.audit",
            description="Closedness, unmixedness and CM status of every single-vertex deletion of a connected graph.",
        )
        async def audit(text: str, labeling: str = "identity") -> dict:
            return self.run_report("audit", text, labeling)
