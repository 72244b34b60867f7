import numpy as np
import pytest

from blocktrace import serialize
from blocktrace.blocks import BlockMatrix, block_diag, j_block, partial_trace_2
from blocktrace.generate import GenSpec, gen
from blocktrace.linalg import hermitian_eigvals
from blocktrace.orders import is_psd
from blocktrace.rng import derive_seed
from blocktrace.suite import (
    EXPECTED_FAILURE_CASES,
    REGISTRY,
    Derived,
    RunConfig,
    SLACK_BUILDERS,
    ando_residual,
    build_slack,
    case_ids,
    check_case,
    eq18_slack,
    make_instance,
    open_question_scan,
    run_case_trials,
    run_suite,
    symmetrize_offdiag,
    total_failures,
)

ALL_IDS = case_ids()


def test_registry_shape():
    assert len(REGISTRY) == 44
    assert len(set(ALL_IDS)) == 44
    for case in REGISTRY.values():
        assert case.description
        assert case.check_kind in (
            "psd-slack",
            "ppt-of-derived",
            "scalar",
            "majorization",
            "conditional-majorization",
            "sv-dominance",
            "expected-failure",
        )


@pytest.mark.parametrize("case_id", ALL_IDS)
@pytest.mark.parametrize("dims", [(2, 2), (3, 2), (2, 4), (3, 3)])
def test_every_case_holds_on_random_instances(case_id, dims):
    m, n = dims
    for trial in range(3):
        seed = derive_seed(1000, case_id, trial)
        report = check_case(case_id, make_instance(case_id, m, n, seed), seed=seed)
        assert report.holds, (case_id, dims, seed, report.witness)


def test_expected_failure_case_detects_violation():
    assert EXPECTED_FAILURE_CASES == ("psi-not-2-positive",)
    inst = make_instance("psi-not-2-positive", 2, 3, 0)
    report = check_case("psi-not-2-positive", inst)
    assert report.holds  # holds means: the violation was found
    assert report.witness <= -1.0 + 1e-8


def test_build_slack_matches_check():
    a = make_instance("ando", 3, 2, 17)
    slack = build_slack("ando", a)
    assert [label for label, _ in slack] == ["main"]
    report = check_case("ando", a)
    lam_min = hermitian_eigvals(slack[0][1]).values[-1]
    assert report.witness == pytest.approx(float(lam_min))


def test_build_slack_for_derived_ppt_cases():
    a = make_instance("lin-2x2-ppt", 2, 3, 4)
    slack = dict(build_slack("lin-2x2-ppt", a))
    assert set(slack) == {"derived", "derived-tau"}
    for s in slack.values():
        assert is_psd((s + s.conj().T) / 2).holds


def test_build_slack_rejects_non_slack_cases():
    a = make_instance("schur-majorization", 2, 2, 0)
    with pytest.raises(ValueError):
        build_slack("schur-majorization", a)
    with pytest.raises(KeyError):
        build_slack("no-such-case", a)


def test_tightness_all_ones_input():
    """On the rank-one all-ones instance the first slack matrix is singular:
    the inequality is attained."""
    a = gen(GenSpec("ones-kron", m=2, n=2))
    report = check_case("choi-tr1", a)
    assert report.holds
    assert abs(report.witness) < 1e-12


def test_tightness_identity_residual():
    for m, n in [(2, 2), (3, 4), (4, 4)]:
        a = BlockMatrix(m, n, np.eye(m * n, dtype=np.complex128))
        lam = hermitian_eigvals(ando_residual(a)).values
        assert np.allclose(lam, (m - 1) * (n - 1))


def test_eq18_slack_is_psd_for_small_dims():
    for m in range(1, 6):
        for n in range(1, 6):
            assert is_psd(eq18_slack(m, n)).holds, (m, n)


def test_correction_terms_are_psd():
    """The improved bounds differ from the classical ones by explicit
    correction terms; each must itself be PSD on PSD input, otherwise
    'improved' would be vacuous."""
    a = gen(GenSpec("psd", m=3, n=3, seed=23))
    d = Derived(a)
    jb = j_block(3, 3).dense
    corrections = {
        "block-diagonal": 2 * d.d_a,
        "swapped-hadamard": 2 * (d.tau * jb),
        "trace-of-diagonal": 2 * np.kron(partial_trace_2(block_diag(a)), np.eye(3))
        - 2 * d.d_a,
        "gap-hadamard": 2 * ((np.kron(np.eye(3), d.tr1) - d.dense) * jb),
    }
    for label, corr in corrections.items():
        assert is_psd((corr + corr.conj().T) / 2).holds, label


def test_improved_bounds_imply_classical_ones():
    """Chain check: subtracting a PSD correction from a PSD slack keeps the
    classical statement PSD, so the improved cases strictly refine the
    classical cases on every instance."""
    a = gen(GenSpec("psd", m=3, n=2, seed=31))
    improved = dict(build_slack("li-tr1-improved", a))["main"]
    classical = dict(build_slack("choi-tr1", a))["main"]
    d = Derived(a)
    assert np.allclose(classical, improved + 2 * d.d_a - d.tau - d.tau)
    # and numerically: improved witness <= classical witness is not required,
    # but classical = improved + PSD must be PSD whenever improved is
    assert is_psd((improved + improved.conj().T) / 2).holds
    assert is_psd((classical + classical.conj().T) / 2).holds


def test_integer_cases_imply_each_other():
    """The improved integer inequalities dominate the two-sided ones
    (their sum recovers the classical inequality with room to spare)."""
    for seed in range(30):
        x = gen(GenSpec("real-int", m=4, n=5, seed=seed, int_bound=50))
        improved = check_case("ck-improved", x)
        classical = check_case("ck-classical", x)
        two_sided = check_case("ck-lih", x)
        assert improved.holds and classical.holds and two_sided.holds
        # the absolute-value part is the strongest of the two-sided family
        by_label = {p.label: p.witness for p in two_sided.parts}
        assert by_label["abs"] <= by_label["minus"]
        # exactness: witnesses are integers
        for p in improved.parts + classical.parts + two_sided.parts:
            assert float(p.witness).is_integer()


def test_offdiag_symmetrization_is_exact():
    a = gen(GenSpec("psd", m=2, n=3, seed=3))
    h = symmetrize_offdiag(a, skew=False)
    k = h.block(0, 1)
    assert np.allclose(k, k.conj().T)
    assert is_psd(h.dense).holds
    hs = symmetrize_offdiag(a, skew=True)
    ks = hs.block(0, 1)
    assert np.allclose(ks, -ks.conj().T)
    assert is_psd(hs.dense).holds


def test_conditional_case_counts_premise_misses():
    seen_miss = False
    for seed in range(40):
        a = make_instance("hiroshima-conditional", 2, 2, seed)
        report = check_case("hiroshima-conditional", a, seed=seed)
        assert report.holds
        if report.premise_misses:
            seen_miss = True
    assert seen_miss  # random PSD matrices usually violate the premise


def test_run_config_validation():
    with pytest.raises(KeyError):
        RunConfig(("bogus",), ((2, 2),), 1, 0)
    with pytest.raises(ValueError):
        RunConfig(("ando",), (), 1, 0)
    with pytest.raises(ValueError):
        RunConfig(("ando",), ((2, 2),), -1, 0)


def test_run_case_trials_aggregates():
    config = RunConfig(("ando",), ((2, 2), (2, 3)), 6, 42)
    entry = run_case_trials("ando", config)
    assert entry["trials"] == 6
    assert entry["failures"] == 0
    assert entry["worst_witness"] is not None
    assert entry["worst_dims"] in ("2x2", "2x3")


def test_suite_report_deterministic_and_thread_invariant():
    config = RunConfig(tuple(ALL_IDS), ((2, 2), (2, 3)), 4, 42)
    r1 = run_suite(config, threads=1)
    r2 = run_suite(config, threads=4)
    assert serialize.dump(r1) == serialize.dump(r2)
    assert total_failures(r1) == 0


def test_open_question_scan_contract():
    report = open_question_scan([(2, 2), (3, 2)], trials=20, seed=42)
    assert report["trials"] == 20
    assert report["sanity_violations"] == 0
    assert report["min_lambda_min"] > 0  # strictly positive in practice
    assert sum(report["histogram"]["counts"]) == 20
    again = open_question_scan([(2, 2), (3, 2)], trials=20, seed=42)
    assert serialize.dump(report) == serialize.dump(again)


def test_open_question_scan_empty():
    report = open_question_scan([(2, 2)], trials=0, seed=0)
    assert report["trials"] == 0
    assert report["min_lambda_min"] is None


def test_slack_builders_cover_declared_cases():
    declared = {cid for cid, c in REGISTRY.items() if c.check_kind == "psd-slack"}
    assert declared == set(SLACK_BUILDERS)
