import json

import pytest

from golden import N4_SIGN, N6_BINARY, HOP_MATRIX_12, HOP_PROFILE_TABLE
from mnet.cli import main
from mnet.matrix import format_csv, format_grid


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_binary_csv(capsys):
    code, out, _ = run(capsys, "generate", "--n", "6", "--stage", "binary", "--format", "csv")
    assert code == 0
    assert out == format_csv(N6_BINARY)


def test_generate_sign_n4_even(capsys):
    code, out, _ = run(capsys, "generate", "--n", "4", "--stage", "sign", "--polarity", "even")
    assert code == 0 and out == format_grid(N4_SIGN)


def test_generate_non_prime(capsys):
    code, _, err = run(capsys, "generate", "--n", "8")
    assert code == 2
    assert "not prime" in err


def test_generate_dot_24_nodes(capsys):
    code, out, _ = run(capsys, "generate", "--n", "12", "--stage", "graph", "--format", "dot")
    assert code == 0
    assert out.startswith("graph mnet_6_24 {")
    assert out.count(" -- ") == 72


def test_generate_type1_matrix_only(capsys):
    code, out, _ = run(capsys, "generate", "--n", "5", "--type", "I", "--stage", "mn")
    assert code == 0 and out.splitlines()[1] == "1 2 3 4 5"
    code, _, _ = run(capsys, "generate", "--n", "5", "--type", "I", "--stage", "graph")
    assert code == 2


def test_generate_json(capsys):
    code, out, _ = run(capsys, "generate", "--n", "6", "--format", "json")
    payload = json.loads(out)
    assert payload["schema"] == 1 and payload["matrix"] == N6_BINARY


def test_generate_out_file(capsys, tmp_path):
    target = tmp_path / "m.csv"
    code, out, _ = run(capsys, "generate", "--n", "6", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == format_csv(N6_BINARY)


def test_analyze_hop_matrix(capsys):
    code, out, _ = run(capsys, "analyze", "--n", "6", "--hop-matrix", "--format", "csv")
    assert code == 0
    assert out == format_csv(HOP_MATRIX_12)
    code, out, _ = run(capsys, "analyze", "--n", "6", "--hop-matrix")
    rows = out.split("hop matrix:\n")[1].splitlines()[1:]
    assert [[int(x) for x in r.split()[1:]] for r in rows] == HOP_MATRIX_12


def test_analyze_profile_table(capsys):
    code, out, _ = run(capsys, "analyze", "--table1", "--max-prime", "19", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n+1,n,N,p,1-hop,2-hop,3-hop,4-hop"
    assert [tuple(map(int, l.split(","))) for l in lines[1:]] == HOP_PROFILE_TABLE


def test_analyze_n4(capsys):
    code, out, _ = run(capsys, "analyze", "--n", "4")
    assert code == 0
    assert "hop profile: 2 2 2 1" in out
    assert "mean hop distance: 16/7 = 2.29" in out
    assert "diameter: 4" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--n", "6", "--format", "json", "--tree")
    p = json.loads(out)
    assert p["mean_hop"]["exact"] == "24/11"
    assert p["connectivity_index"] == "1/2"
    assert p["vertex_connectivity"] == 3
    assert p["spanning_tree"]["levels"][2] == [2, 3, 4, 5]


def test_analyze_requires_n(capsys):
    assert run(capsys, "analyze")[0] == 2


def test_paths_report(capsys):
    code, out, _ = run(capsys, "paths", "--n", "6", "--src", "1", "--dst", "6")
    assert code == 0
    assert "total successful paths: 56" in out
    for h, c in [(4, 8), (6, 12), (8, 16), (10, 20)]:
        assert f"{h}-hop paths ({c}):" in out
    assert "4-hop class: 7-node, 14-edge fault-tolerant" in out
    assert "10-hop class: 1-node, 8-edge fault-tolerant" in out


def test_paths_json(capsys):
    code, out, _ = run(capsys, "paths", "--n", "6", "--src", "1", "--dst", "6", "--format", "json")
    p = json.loads(out)
    assert p["schema"] == 1 and p["total"] == 56
    assert {k: len(v) for k, v in p["paths"].items()} == {"4": 8, "6": 12, "8": 16, "10": 20}
    assert p["disjoint"]["bound_at_diameter"] == 3


def test_paths_disjoint(capsys):
    code, out, _ = run(capsys, "paths", "--n", "6", "--src", "1", "--dst", "7", "--disjoint")
    assert code == 0
    assert "node-disjoint paths: 3" in out
    assert "\n1,7\n" in out
    assert "total successful paths" not in out


@pytest.mark.parametrize("src,dst", [(1, 1), (0, 3), (1, 13)])
def test_paths_bad_nodes(capsys, src, dst):
    assert run(capsys, "paths", "--n", "6", "--src", str(src), "--dst", str(dst))[0] == 2


def test_paths_cap_exit_3(capsys):
    code, _, err = run(capsys, "paths", "--n", "6", "--src", "1", "--dst", "6", "--cap", "10")
    assert code == 3 and "cap" in err


def test_compare_three_rows(capsys):
    code, out, _ = run(capsys, "compare", "--mnet", "6", "--hypercube", "3", "--debruijn", "2,3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert "mnet(6)" in lines[1] and "hypercube(3)" in lines[2] and "debruijn(2,3)" in lines[3]
    assert lines[1].split()[5] == "4"


def test_compare_order_follows_flags(capsys):
    _, out, _ = run(capsys, "compare", "--format", "csv", "--hypercube", "2", "--mnet", "4",
                    "--hypercube", "3")
    assert [l.split(",")[1] for l in out.splitlines()[1:]] == ["hypercube(2)", "mnet(4)", "hypercube(3)"]


def test_compare_none(capsys):
    assert run(capsys, "compare")[0] == 2


def test_compare_csv_single(capsys):
    code, out, _ = run(capsys, "compare", "--mnet", "6", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    assert lines[1].startswith("M-network,mnet(6),0,3,12,24/11,2.1818,4,")


@pytest.mark.parametrize("argv", [
    ["compare", "--msn", "3,4"],
    ["compare", "--debruijn", "2"],
    ["compare", "--shufflenet", "x,2"],
    ["compare", "--mnet", "8"],
])
def test_compare_malformed(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["generate", "--n", "12", "--stage", "graph", "--format", "dot"],
    ["analyze", "--n", "10", "--hop-matrix", "--tree"],
    ["paths", "--n", "6", "--src", "2", "--dst", "9", "--format", "json"],
    ["compare", "--mnet", "6", "--msn", "4,4", "--shufflenet", "2,3"],
])
def test_byte_identical_reruns(capsys, argv):
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
