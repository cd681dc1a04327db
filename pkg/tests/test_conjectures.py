import numpy as np
import pytest

from mubcorr.conjectures import (
    appcqc1_check,
    appecqc_check,
    bound_ladder,
    coles_piani_r,
    cqc_gap,
    ecqc_report,
    entanglement_witness,
    kappa1,
    kappa2,
    subset_min_mi_sum,
    sufficient_cqc,
    sufficient_ecqc,
)
from mubcorr.isotropic import iso_measured_mi, iso_mutual_information
from mubcorr.mubs import Basis, mub_family
from mubcorr.states import (
    BipartiteState,
    is_ppt,
    isotropic,
    isotropic_p_range,
    maximally_entangled,
    pure_state,
    random_mixed,
    random_pure,
)

LOG2_3 = np.log2(3.0)


def zx(d):
    fam = mub_family(d)
    return fam[0], fam[1]


class TestCqcGap:
    def test_bell_state_saturates(self):
        assert cqc_gap(maximally_entangled(2), *zx(2)) == pytest.approx(0.0, abs=1e-9)

    def test_maximally_mixed_product(self):
        st = BipartiteState(np.eye(9) / 9, 3)
        assert cqc_gap(st, *zx(3)) == pytest.approx(0.0, abs=1e-10)

    def test_isotropic_matches_closed_forms(self):
        for p in np.linspace(*isotropic_p_range(3), 40):
            gap = cqc_gap(isotropic(3, float(p)), *zx(3))
            expected = iso_mutual_information(3, float(p)) - 2 * iso_measured_mi(3, float(p))
            assert gap == pytest.approx(expected, abs=1e-9)
            assert gap >= -1e-9

    def test_requires_unbiased_pair(self):
        z = mub_family(3)[0]
        with pytest.raises(ValueError, match="unbiased"):
            cqc_gap(isotropic(3, 0.2), z, z)


class TestEcqcReport:
    def test_isotropic_p1_values(self):
        rep = ecqc_report(isotropic(3, 1.0), mub_family(3))
        assert rep.i_ab == pytest.approx(2 * LOG2_3, abs=1e-9)
        assert rep.per_basis_mi[0] == pytest.approx(LOG2_3, abs=1e-9)
        assert rep.per_basis_mi[1] == pytest.approx(LOG2_3, abs=1e-9)
        assert max(rep.per_basis_mi[2:]) < 1e-9
        assert rep.ecqc_rhs == pytest.approx(LOG2_3, abs=1e-9)
        assert rep.ecqc_gap == pytest.approx(LOG2_3, abs=1e-9)

    @pytest.mark.parametrize("d", (2, 3, 5))
    def test_maximally_mixed_all_zero(self, d):
        rep = ecqc_report(isotropic(d, 0.0), mub_family(d))
        assert max(abs(m) for m in rep.per_basis_mi) < 1e-10
        assert rep.ecqc_gap == pytest.approx(0.0, abs=1e-10)

    def test_random_states_hold(self, rng):
        fam = mub_family(3)
        for _ in range(200):
            rep = ecqc_report(random_mixed(3, rng=rng), fam)
            assert rep.ecqc_gap >= -1e-9
            assert rep.cqc_gap >= -1e-9

    def test_rhs_consistency_both_routes(self, rng):
        fam = mub_family(3)
        for _ in range(20):
            rep = ecqc_report(random_mixed(3, rng=rng), fam)
            assert rep.mi_max == max(rep.per_basis_mi)
            assert abs(rep.ecqc_rhs - (sum(rep.per_basis_mi) - rep.mi_max)) < 1e-12
            assert abs(rep.ecqc_rhs - subset_min_mi_sum(rep.per_basis_mi)) < 1e-12

    def test_subset_min_explicit(self):
        assert subset_min_mi_sum([0.5, 0.1, 0.3]) == pytest.approx(0.4)
        assert subset_min_mi_sum([1.0, 1.0, 0.0, 0.0]) == pytest.approx(1.0)

    def test_dim_mismatch(self):
        with pytest.raises(ValueError, match="does not match"):
            ecqc_report(isotropic(3, 0.1), mub_family(2))


class TestSufficientConditions:
    def test_maximally_mixed_marginal_always_satisfies_cqc_condition(self, rng):
        # H(A) = log d makes the right side zero while the left is >= 0 by DPI.
        for p in (0.0, 0.4, 0.9):
            res = sufficient_cqc(isotropic(3, p), *zx(3))
            assert res.rhs == pytest.approx(0.0, abs=1e-9)
            assert res.satisfied and res.implies_cqc

    def test_bell_state_numeric(self):
        res = sufficient_cqc(maximally_entangled(2), *zx(2))
        assert res.satisfied and res.implies_cqc

    def test_implication_on_random_sample(self, rng):
        z, x = zx(2)
        for _ in range(300):
            st = random_mixed(2, rng=rng)
            res = sufficient_cqc(st, z, x)
            if res.satisfied:
                assert cqc_gap(st, z, x) >= -1e-9
            assert res.implies_cqc

    def test_ecqc_condition_zero_at_maximally_mixed(self):
        for d in (2, 3, 5):
            res = sufficient_ecqc(isotropic(d, 0.0), mub_family(d))
            assert res.lhs == pytest.approx(0.0, abs=1e-9)
            assert res.rhs == pytest.approx(0.0, abs=1e-9)
            assert res.satisfied

    def test_ecqc_implication_on_random_sample(self, rng):
        fam = mub_family(3)
        for _ in range(100):
            st = random_mixed(3, rng=rng)
            res = sufficient_ecqc(st, fam)
            if res.satisfied:
                assert ecqc_report(st, fam).ecqc_gap >= -1e-9


class TestKappas:
    def test_kappa1_zero_for_z_eigenstate(self):
        st = pure_state(np.array([1, 0, 0, 0]), 2)
        assert kappa1(st, *zx(2)) == pytest.approx(0.0, abs=1e-10)

    def test_kappa1_is_maassen_uffink_slack(self, rng):
        for d in (2, 3):
            fam = mub_family(d)
            for _ in range(20):
                st = random_mixed(d, rng=rng)
                k1 = kappa1(st, fam[0], fam[1])
                mu = bound_ladder(st, fam).maassen_uffink_slack
                assert abs(k1 - mu) < 1e-12
                assert k1 >= -1e-9

    @pytest.mark.parametrize("d", (3, 5))
    def test_kappa2_zero_for_maximally_mixed_product(self, d):
        assert kappa2(isotropic(d, 0.0), mub_family(d)) == pytest.approx(0.0, abs=1e-9)

    @pytest.mark.parametrize("d", (3, 5))
    def test_kappa2_maximally_entangled(self, d):
        expected = (d - 2) * np.log2(d)
        assert kappa2(maximally_entangled(d), mub_family(d)) == pytest.approx(
            expected, abs=1e-9
        )


class TestBoundLadder:
    def test_maximally_mixed_product_d2(self):
        bl = bound_ladder(BipartiteState(np.eye(4) / 4, 2), mub_family(2))
        assert bl.maassen_uffink_slack == pytest.approx(0.0, abs=1e-10)

    @pytest.mark.parametrize("d", (2, 3, 5))
    def test_berta_tight_for_maximally_entangled(self, d):
        bl = bound_ladder(maximally_entangled(d), mub_family(d))
        assert bl.berta_slack == pytest.approx(0.0, abs=1e-9)
        assert bl.coles_piani_slack == pytest.approx(0.0, abs=1e-9)
        assert bl.xie_slack == pytest.approx(0.0, abs=1e-9)
        assert bl.delta_m == pytest.approx(0.0, abs=1e-9)

    @pytest.mark.parametrize("d", (2, 3))
    def test_random_states_never_violate(self, d, rng):
        fam = mub_family(d)
        for _ in range(100):
            st = random_mixed(d, rng=rng) if rng.uniform() < 0.5 else random_pure(d, rng)
            bl = bound_ladder(st, fam)
            assert min(bl.proven_slacks()) >= -1e-9

    def test_alt_constant_shifts_sanchez_slack(self, rng):
        st = random_mixed(3, rng=rng)
        fam = mub_family(3)
        default = bound_ladder(st, fam).sanchez_slack
        alt = bound_ladder(st, fam, alt_sanchez_constant=True).sanchez_slack
        assert alt - default == pytest.approx(4 * (np.log2(4) - LOG2_3), abs=1e-12)


class TestColesPianiR:
    @pytest.mark.parametrize("d", (2, 3, 5))
    def test_mub_pair(self, d):
        fam = mub_family(d)
        assert coles_piani_r(fam[0], fam[1]) == pytest.approx(np.log2(d), abs=1e-10)

    def test_identical_bases(self):
        z = mub_family(3)[0]
        assert coles_piani_r(z, z) == pytest.approx(2 * LOG2_3, abs=1e-12)

    def test_rotation_sweep_decreases_from_two_to_one(self):
        z = Basis(np.eye(2, dtype=complex), "z")
        values = []
        for theta in np.linspace(0.0, np.pi / 4, 12):
            c, s = np.cos(theta), np.sin(theta)
            rot = Basis(np.array([[c, -s], [s, c]], dtype=complex), "rot")
            values.append(coles_piani_r(z, rot))
        assert values[0] == pytest.approx(2.0, abs=1e-12)
        assert values[-1] == pytest.approx(1.0, abs=1e-12)
        assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))


class TestWitnessAndConditionalBounds:
    def test_bell_fires(self):
        assert entanglement_witness(maximally_entangled(2), *zx(2))

    def test_product_state_does_not_fire(self, rng):
        mixed = random_mixed(2, rng=rng)
        st = BipartiteState(np.kron(mixed.reduced("A"), mixed.reduced("B")), 2)
        assert not entanglement_witness(st, *zx(2))

    def test_fired_isotropic_states_are_entangled(self):
        z, x = zx(2)
        for p in np.linspace(*isotropic_p_range(2), 60):
            st = isotropic(2, float(p))
            if entanglement_witness(st, z, x):
                assert not is_ppt(st)

    def test_appcqc1_maximally_mixed_product(self):
        st = BipartiteState(np.eye(4) / 4, 2)
        assert appcqc1_check(st, *zx(2)) == pytest.approx(0.0, abs=1e-10)

    def test_appcqc1_bell(self):
        assert appcqc1_check(maximally_entangled(2), *zx(2)) == pytest.approx(0.0, abs=1e-9)

    def test_appcqc1_requires_d2(self):
        with pytest.raises(ValueError, match="d = 2"):
            appcqc1_check(isotropic(3, 0.1), *zx(3))

    def test_appecqc_logged_across_sweep(self):
        fam = mub_family(3)
        for p in np.linspace(*isotropic_p_range(3), 15):
            slack = appecqc_check(isotropic(3, float(p)), fam)
            assert np.isfinite(slack)

    def test_appecqc_alt_constant(self):
        st = isotropic(3, 0.5)
        fam = mub_family(3)
        default = appecqc_check(st, fam)
        alt = appecqc_check(st, fam, alt_sanchez_constant=True)
        assert alt - default == pytest.approx(8 * (np.log2(4) - LOG2_3), abs=1e-12)


class TestChainConsistency:
    @pytest.mark.parametrize("d", (2, 3))
    def test_two_sided_below_coles_piani_budget(self, d, rng):
        # I(Z:Z) + I(X:X) <= I(Z:B) + I(X:B) <= log d - H(A|B)
        from mubcorr.measure import classical_mi, joint_distribution, one_sided_mi
        from mubcorr.states import conditional_entropy

        z, x = zx(d)
        for _ in range(40):
            st = random_mixed(d, rng=rng)
            two = sum(classical_mi(joint_distribution(st, b, b)) for b in (z, x))
            one = sum(one_sided_mi(st, b, "A") for b in (z, x))
            budget = np.log2(d) - conditional_entropy(st)
            assert two <= one + 1e-9
            assert one <= budget + 2e-9

    def test_mi_budget_dominates_quantum_mi(self, rng):
        # log d - H(A|B) >= I(A:B) since H(A) <= log d.
        from mubcorr.states import conditional_entropy, quantum_mutual_information

        for _ in range(40):
            st = random_mixed(3, rng=rng)
            assert np.log2(3) - conditional_entropy(st) >= quantum_mutual_information(st) - 1e-9
