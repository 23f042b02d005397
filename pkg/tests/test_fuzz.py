import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critgroup.critical import structural_maps, verify_main_theorem
from critgroup.digraph import random_k_out_regular
from critgroup.fuzz import MUTATIONS, mutate_maps, run_fuzz, run_trial, summarize, trial_instance


def test_trial_instance_is_pure():
    assert trial_instance(5, 3) == trial_instance(5, 3)
    assert trial_instance(5, 3)[0] != trial_instance(5, 4)[0]


def test_fixed_sizes():
    g, bp, n, k = trial_instance(0, 0, n=4, k=3)
    assert (n, k, g.n_vertices, g.n_edges) == (4, 3, 4, 12)


@pytest.mark.parametrize("kind", MUTATIONS)
def test_mutations_change_maps(kind):
    g, bp = random_k_out_regular(4, 2, 1)
    maps = structural_maps(g, bp)
    assert mutate_maps(maps, bp, kind) != maps


def test_unknown_mutation():
    g, bp = random_k_out_regular(3, 2, 1)
    with pytest.raises(ValueError):
        mutate_maps(structural_maps(g, bp), bp, "sigma")


def test_summary_is_order_independent():
    results = run_fuzz(6, 9)
    assert summarize(results, 9) == summarize(list(reversed(results)), 9)


def test_failures_are_listed():
    text = summarize([run_trial(2, 0, mutation="rho")], 2)
    assert text.startswith("trial 0") and "1 failed" in text


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 6), st.sampled_from([2, 3]), st.integers(0, 2**32))
def test_theorem_holds(n, k, seed):
    g, bp = random_k_out_regular(n, k, seed)
    report = verify_main_theorem(g, bp)
    assert report.all_binding_passed, report.to_text()
    assert report.kernel_equals_ktorsion
