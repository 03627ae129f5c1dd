from typing import Optional

from cli.commands import RunOptions
from core.foundation.base_server import BaseServer
from tools.clutter_tool import ClutterTool
from tools.graph_construction_tool import GraphConstructionTool
from tools.ideal_oracle_tool import IdealOracleTool


class MServer(BaseServer):
    def __init__(self, host: str, port: int, name="cm_closure", options: Optional[RunOptions] = None):
        BaseServer.__init__(self, host=host, port=port, name=name)
        graph_tool: GraphConstructionTool = GraphConstructionTool(mcp_server=self.get(), options=options)
        oracle_tool: IdealOracleTool = IdealOracleTool(mcp_server=self.get(), options=options)
        clutter_tool: ClutterTool = ClutterTool(mcp_server=self.get(), options=options)

        self.load_default_tools([graph_tool, oracle_tool, clutter_tool])
        self.register_tools()
