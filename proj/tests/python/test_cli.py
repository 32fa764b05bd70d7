"""End-to-end checks of the vqn command-line tool.

The CLI binary path comes from the VQN_CLI environment variable.
"""

import json
import os
import subprocess
import sys
import tempfile

CLI = os.environ["VQN_CLI"]


def run(*args, expect=0):
    proc = subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == expect, (args, proc.returncode, proc.stderr)
    return proc.stdout


def test_generate():
    out = run("generate", "vq", "3")
    assert out.splitlines() == sorted(out.splitlines())
    assert len(out.splitlines()) == 12
    assert "011 110" in out

    out = run("generate", "q", "2")
    assert len(out.splitlines()) == 4

    dot = run("generate", "vq", "10", "--format", "dot")
    assert dot.count(" -- ") == 5120

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "vq4.edges")
        summary = run("generate", "vq", "4", "--out", path)
        assert "16 vertices, 32 edges" in summary
        with open(path) as f:
            assert len(f.read().splitlines()) == 32

    run("generate", "vq", "25", expect=2)  # above the size cap
    run("generate", "nosuch", "3", expect=2)


def test_oracles():
    out = run("neighbors", "4", "0101")
    assert out.splitlines() == [
        "d=1 0100 normal",
        "d=2 0111 normal",
        "d=3 0001 normal",
        "d=4 1101 normal",
    ]
    assert run("adjacent", "3", "011", "110") == (
        "adjacent dimension=3 kind=crossing\n"
    )
    run("adjacent", "2", "10", "01", expect=1)
    run("adjacent", "3", "011", "0110", expect=2)  # width mismatch


def test_transport():
    out = run("transport", "1", "0", "1")
    assert "image: 0 -> 1 ok" in out
    assert "is_automorphism: true" in out

    out = run("transport", "4", "0101", "1101")
    assert "is_automorphism: true" in out

    out = run("transport", "6", "000000", "110101")
    assert "phi_" in out
    assert "is_automorphism: true" in out

    # beyond the materialization cap: construction works, verdict is skipped
    out = run("transport", "40", "0" * 40, "1" * 40, "--cap", "20")
    assert "verification skipped" in out
    assert "ok" in out


def test_verify():
    assert run("verify", "4", "--mode", "full").startswith(
        "16/16 targets verified"
    )
    out = run("verify", "9", "--mode", "sampled", "--seed", "7")
    assert out.startswith("100/100 sampled pairs verified (seed 7)")
    report = json.loads(run("verify", "3", "--format", "json"))
    assert report["passed"] == 8 and report["mode"] == "full"
    run("verify", "9", "--mode", "full", expect=2)  # above exhaustive cap


def test_metrics():
    report = json.loads(run("metrics", "vq", "3", "--format", "json"))
    assert report["diameter"] == 2
    assert report["average_distance_num"] == 11
    assert report["average_distance_den"] == 7
    assert report["average_distance_decimal"] == "1.571429"

    report = json.loads(
        run("metrics", "q", "3", "--mode", "all-sources", "--format", "json")
    )
    assert report["diameter"] == 3
    assert report["eccentricity_profile"] == {"3": 8}

    report = json.loads(
        run(
            "metrics",
            "circulant",
            "8",
            "--connection",
            "1,4,7",
            "--format",
            "json",
        )
    )
    assert report["diameter"] == 2


def test_refute_and_cayley():
    out = run("refute-edge-transitivity", "4")
    assert "{0101,0001}" in out and "{0101,1101}" in out
    assert "counts 4 vs 0" in out
    run("refute-edge-transitivity", "2", expect=1)

    out = run("cayley-check")
    assert out.startswith("VQ3 is isomorphic to C(Z8,{1,4,7}): mapping found")
    report = json.loads(run("cayley-check", "--format", "json"))
    assert report["isomorphic"] is True
    assert sorted(report["mapping"]) == list(range(8))


def test_config_precedence():
    with tempfile.TemporaryDirectory() as tmp:
        cfg = os.path.join(tmp, "cfg.json")
        with open(cfg, "w") as f:
            json.dump({"size_cap": 5}, f)
        run("--config", cfg, "generate", "vq", "6", expect=2)
        # a flag overrides the file
        out = run("--config", cfg, "generate", "vq", "6", "--cap", "6")
        assert len(out.splitlines()) == 192

        bad = os.path.join(tmp, "bad.json")
        with open(bad, "w") as f:
            f.write('{"size_cap": 5, "unknown_knob": 1}')
        run("--config", bad, "generate", "vq", "3", expect=2)

        # explicitly inconsistent caps are rejected
        inconsistent = os.path.join(tmp, "inconsistent.json")
        with open(inconsistent, "w") as f:
            json.dump({"size_cap": 5, "exhaustive_cap": 8}, f)
        run("--config", inconsistent, "generate", "vq", "3", expect=2)

    # reports written via --out match the json printed on stdout
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "metrics.json")
        stdout_json = run(
            "metrics", "vq", "4", "--format", "json", "--out", path
        )
        with open(path) as f:
            assert json.loads(f.read()) == json.loads(stdout_json)


def main():
    test_generate()
    test_oracles()
    test_transport()
    test_verify()
    test_metrics()
    test_refute_and_cayley()
    test_config_precedence()
    print("cli tests passed")


if __name__ == "__main__":
    main()
