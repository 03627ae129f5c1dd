from __future__ import annotations

from pathlib import Path

import pytest
from fastmcp import Client
from fastmcp.exceptions import ToolError

from cli.commands import RunOptions
from server.mserver import MServer

SAMPLES = Path(__file__).resolve().parent.parent / "samples"
PREFIX = "cm_closure"


def _text(name: str) -> str:
    return (SAMPLES / name).read_text(encoding="utf-8")


@pytest.fixture
def server() -> MServer:
    return MServer("127.0.0.1", 0, options=RunOptions(timing=False))


async def test_every_tool_is_registered(server):
    async with Client(server.get()) as client:
        names = {tool.name for tool in await client.list_tools()}
    assert names == {
        "get_capabilities",
        f"{PREFIX}.GraphConstructionTool.close",
        f"{PREFIX}.GraphConstructionTool.construct",
        f"{PREFIX}.GraphConstructionTool.pi_order",
        f"{PREFIX}.IdealOracleTool.oracle",
        f"{PREFIX}.IdealOracleTool.audit",
        f"{PREFIX}.ClutterTool.clutter_construct",
        f"{PREFIX}.ClutterTool.clutter_status",
    }


async def test_capabilities_group_tools_by_class(server):
    async with Client(server.get()) as client:
        result = await client.call_tool("get_capabilities", {})
    tools = result.structured_content["tools"]
    assert set(tools) == {"GraphConstructionTool", "IdealOracleTool", "ClutterTool"}
    assert tools["IdealOracleTool"]["tools"] == [f"{PREFIX}.IdealOracleTool.audit", f"{PREFIX}.IdealOracleTool.oracle"]


async def test_construct_tool_returns_the_report(server):
    async with Client(server.get()) as client:
        result = await client.call_tool(f"{PREFIX}.GraphConstructionTool.construct",
                                        {"text": _text("seven_vertex.graph")})
    report = result.structured_content
    assert [step["added_edge"] for step in report["trace"]] == [[2, 3], [1, 4]]
    assert report["verdicts"]["cm_status"] == "CM"
    assert set(report["timing"].values()) == {0.0}


async def test_oracle_tool_accepts_a_labeling(server):
    async with Client(server.get()) as client:
        result = await client.call_tool(f"{PREFIX}.IdealOracleTool.oracle",
                                        {"text": _text("claw.graph"), "labeling": "bfs"})
    report = result.structured_content
    assert report["labeling"]["strategy"] == "bfs"
    assert report["verdicts"]["cm_status"] == "NOT_CM"


async def test_clutter_status_tool(server):
    async with Client(server.get()) as client:
        result = await client.call_tool(f"{PREFIX}.ClutterTool.clutter_status",
                                        {"text": _text("triangle_tail.clutter")})
    (component,) = result.structured_content["verdicts"]["components"]
    assert component["cm_status"] == "CM"


async def test_pi_order_tool(server):
    async with Client(server.get()) as client:
        result = await client.call_tool(f"{PREFIX}.GraphConstructionTool.pi_order", {"text": _text("c4.graph")})
    assert result.structured_content["verdicts"]["ordering_status"] == "CERTIFIED_NONE"


@pytest.mark.parametrize("tool, text", [
    (f"{PREFIX}.GraphConstructionTool.close", "graph 3\n1 1\n"),
    (f"{PREFIX}.IdealOracleTool.audit", "graph 4\n1 2\n3 4\n"),
    (f"{PREFIX}.ClutterTool.clutter_construct", "clutter 3\n1 2\n1 2 3\n"),
])
async def test_bad_input_becomes_a_tool_error(server, tool, text):
    async with Client(server.get()) as client:
        with pytest.raises(ToolError):
            await client.call_tool(tool, {"text": text})


async def test_unknown_labeling_becomes_a_tool_error(server):
    async with Client(server.get()) as client:
        with pytest.raises(ToolError):
            await client.call_tool(f"{PREFIX}.IdealOracleTool.oracle", {"text": _text("c4.graph"), "labeling": "random"})
