"""Smoke test for the python module: core values on the built-in states."""
import math

import numpy as np

import discrim


def approx(a, b, tol=1e-9):
    assert abs(a - b) < tol, f"{a} != {b}"


def main():
    # States and dense basics.
    g4 = discrim.ghz(4)
    c4 = discrim.cluster4()
    assert g4.is_pure and g4.num_qubits == 4
    approx(discrim.overlap(g4, g4), 1.0)
    approx(discrim.overlap(g4, c4), 0.0)
    amps = np.asarray(g4.amplitudes)
    approx(abs(amps[0]), 1 / math.sqrt(2))

    # Pauli expectations and outcome distributions.
    op = discrim.PauliString("IZZ")
    assert op.weight() == 2 and op.support() == [1, 2]
    approx(discrim.expectation(op, discrim.w3()), -1 / 3)
    probs, labels = discrim.outcome_distribution("ZZZZ", g4)
    approx(sum(probs), 1.0)

    # Graph helpers.
    star4 = discrim.graph_state(4, [(0, 1), (0, 2), (0, 3)])
    assert star4.is_pure
    k, ops = discrim.two_point_count(4, [(0, 1), (0, 2), (0, 3)])
    assert k == 6
    approx(discrim.two_point_bound(4, [(0, 1), (0, 2), (0, 3)],
                                   4, [(0, 1), (1, 2), (2, 3)]), 2 / 3)

    # Information-theoretic primitives.
    approx(discrim.relative_entropy([0.5, 0.5], [0.25, 0.75]), 1 - 0.5 * math.log2(3))
    log2p, tosses = discrim.coin_equivalence(30, 0.48802)
    approx(tosses, 30 * 0.48802)

    # Orbit optimization (small restart counts keep this quick).
    value, params = discrim.max_overlap(g4, c4, restarts=16, seed=1)
    approx(value, 0.5, 1e-6)
    assert "angles" in params

    report = discrim.discriminate(g4, c4, restarts=16, seed=1)
    approx(report["F"]["value"], 8 / 15, 1e-6)
    approx(report["D"]["value"], 0.488020, 2e-4)

    ranked = discrim.subset_search(discrim.ghz(3), discrim.w3(), max_size=1,
                                   metric="D", restarts=16, seed=1)
    assert len(ranked) == 7
    assert ranked[0]["value"] >= ranked[-1]["value"]

    curve = discrim.noise_curve(g4, c4, "stabilizers", [0.0, 1.0],
                                restarts=16, seed=1)
    noise_frac, f, d = curve[-1]  # p = 1: no noise
    approx(noise_frac, 0.0)
    approx(f, 8 / 15, 1e-6)
    approx(curve[0][1], 0.0)  # fully mixed: no discrimination power

    # Finite statistics and measured-data ingestion.
    runs = discrim.simulate_runs(discrim.ghz(3), "stabilizers", 800, seed=3)
    assert len(runs) == 7
    assert all(sum(r["counts"].values()) == r["total"] for r in runs)

    records = [(label, discrim.expectation(label, g4), 0.0)
               for label in discrim.stabilizer_ops(g4) if label != "+IIII"]
    result = discrim.measures_from_correlations(records, c4, metric="F",
                                                restarts=16, seed=1, mc_samples=20)
    approx(result["value"], 8 / 15, 1e-6)
    approx(result["uncertainty"], 0.0, 1e-12)

    print("python smoke test passed")


if __name__ == "__main__":
    main()
