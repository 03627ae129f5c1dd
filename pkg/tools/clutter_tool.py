from core.foundation.tools import ReportTool


class ClutterTool(ReportTool):
    """Clutter file text ("clutter <n>" followed by vertex lists) in, JSON report out."""

    def register_tool(self) -> None:

        @self.get_mcp().tool(
            name=f"{self.tool_mcp_path_prefix}.clutter_construct",
            title=f"{self.tool_mcp_path_prefix}.clutter_construct",
            description="Closed Cohen-Macaulay superclutter [C]; forced pairs enter as new 2-element edges.",
        )
        async def clutter_construct(text: str, labeling: str = "identity") -> dict:
            return self.run_report("clutter construct", text, labeling)

        @self.get_mcp().tool(
            name=f"{self.tool_mcp_path_prefix}.clutter_status",
            title=f"{self.tool_mcp_path_prefix}.clutter_status",
            description="Per-component closedness, unmixedness, edge condition and CM status of a clutter.",
        )
        async def clutter_status(text: str, labeling: str = "identity") -> dict:
            return self.run_report("clutter oracle", text, labeling)
