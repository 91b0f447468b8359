"""Smoke test for the tableaux_lab extension module.

Build and install first:  pip install --no-build-isolation ./crates/python
"""

import json
import math

import tableaux_lab as tl


def main() -> None:
    d = tl.AlphabetDistribution([0.2, 0.5, 0.3])
    assert d.m == 3 and d.k == 3
    assert d.sorted_probs == [0.5, 0.3, 0.2]

    word = tl.sample_word([0.5, 0.5], 50, seed=1)
    assert len(word) == 50 and set(word) <= {1, 2}
    assert word == tl.sample_word([0.5, 0.5], 50, seed=1)

    p, q, shape = tl.rsk([2, 1, 1, 3, 2], 3)
    assert shape == tl.rsk_shape([2, 1, 1, 3, 2], 3)
    assert sum(shape) == 5 and [len(r) for r in p] == shape == [len(r) for r in q]
    assert tl.greene_sums([2, 1, 1, 3, 2], 3, 1) == shape[0]

    pmf = tl.shape_pmf([0.25, 0.25, 0.5], 6)
    assert abs(sum(prob for _, prob in pmf) - 1.0) < 1e-10
    assert tl.syt_count([2, 1]) == 2
    # s_(1)(p) = sum p_i = 1
    assert abs(tl.schur([1], [0.3, 0.7]) - 1.0) < 1e-12

    re, im = tl.sample_gue(5, seed=3)
    ev = tl.eigvals(re, im)
    assert len(ev) == 5 and ev == sorted(ev)
    trace = sum(re[i][i] for i in range(5))
    assert abs(sum(ev) - trace) < 1e-9
    assert tl.eigvals([[2.0, 0.0], [0.0, -1.0]]) == [-1.0, 2.0]

    xi, xi0 = tl.ordered_block_spectrum([0.25, 0.25, 0.5], seed=4)
    assert len(xi) == len(xi0) == 3
    weights = [0.5, 0.25, 0.25]  # sorted order
    assert abs(sum(math.sqrt(w) * x for w, x in zip(weights, xi0))) < 1e-9

    assert tl.eigen_shape_density([0.3, -0.3], [0.5, 0.5]) > 0.0
    lhat = tl.lhat_shape_sample([0.5, 0.5], 200, seed=5)
    assert len(lhat) == 2

    assert tl.ks_two_sample([0.0, 1.0, 2.0], [0.0, 1.0, 2.0]) == 0.0

    try:
        tl.AlphabetDistribution([0.5, 0.6])
    except ValueError:
        pass
    else:
        raise AssertionError("invalid distribution accepted")

    cfg = {"probs": [0.5, 0.5], "n_word": 6, "samples": 200, "seed": 7}
    passed, report = tl.run_experiment("exact-checks", json.dumps(cfg))
    report = json.loads(report)
    assert passed == report["passed"]
    print(f"exact-checks passed={passed} criteria={len(report['criteria'])}")
    print("smoke test OK")


if __name__ == "__main__":
    main()
