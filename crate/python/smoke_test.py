"""Smoke test for the oneplane Python extension.

Build and install first, e.g. `pip install --no-build-isolation ./crates/python`.
"""

import json
import sys

import oneplane


def check(cond, msg):
    if not cond:
        print(f"FAIL: {msg}")
        sys.exit(1)
    print(f"ok: {msg}")


def main():
    fig = oneplane.build_figure1()
    labels = sorted(c["type_level"] for c in fig.classify())
    check(labels == [0, 1, 2, 2, 3, 4], "figure1 crossing levels")
    check(oneplane.Drawing.from_json(fig.to_json()) == fig, "drawing JSON round trip")
    check(fig.to_dot().startswith("graph drawing {"), "DOT export")

    g0 = oneplane.build_g0()
    g = g0.graph
    check((g.n, g.e) == (42, 130), "G0 size")
    check(oneplane.vertex_connectivity(g) == 5, "G0 is 5-connected")
    ok, m = oneplane.near_perfect_verdict(g)
    check(not ok and len(m) == 20, "G0 has no near-perfect matching")
    w = oneplane.tutte_berge(g, mode="gallai-edmonds")
    check(w["deficiency"] == 2, "G0 deficiency")
    cert = oneplane.certify_cut(g0, oneplane.g0_black_set())
    check(not cert["verdict"]["pass"], "G0 black-set certificate fails")

    k8 = oneplane.build_cocktail8()
    report = oneplane.certify_all_cuts(k8, 7)
    check(report["all_pass"] and report["cut_count"] == 4, "cocktail8 certificates")
    check(oneplane.scattering_number(k8.graph)["value"] <= 1, "cocktail8 scattering number")

    q = oneplane.quad_diag(20, seed=1)
    check(q.validate()["valid"] and q.is_type_2a(), "generated instance is valid and type-2A")
    check(len(oneplane.maximum_matching(q.graph)) == 10, "generated instance has a perfect matching")

    small = oneplane.Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    check(len(oneplane.matching_oracle(small)) == 1, "matching oracle")
    try:
        oneplane.matching_oracle(g)
    except oneplane.GuardError as e:
        check("matching-oracle-size" in str(e), "oracle guard raises GuardError")
    else:
        check(False, "oracle guard raises GuardError")
    try:
        oneplane.Drawing.from_json('{"vertices":["a"],"edges":[["a","b"]],"crossings":[]}')
    except ValueError as e:
        check("edges[0]" in str(e), "schema errors name the element")
    json.dumps(q.validate())
    print("smoke test passed")


if __name__ == "__main__":
    main()
