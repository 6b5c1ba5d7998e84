import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from npls.analytic import transfer
from npls.errors import NodeAtI, NotApplicable
from npls.invariants import (
    EntropyValue,
    Regime,
    classify_regime,
    compose_dissipation,
    compose_entropy,
    compute_kappa,
    dissipation_from_entropy,
    dissipation_from_nodes,
    dissipation_operator,
    entropy_from_nodes,
    entropy_from_system,
    imaginary_axis_invariants,
    single_node_invariants,
    two_node_dissipation_closed,
)
from npls.realizations import (
    build_model_delta,
    build_multiplication,
    build_pick_form,
    couple,
    coupling_of_nodes,
    sample_problem,
)
from npls.system import LSystem

from conftest import EX7_NODES, EX8_NODES

LN6 = math.log(6)


def random_nodes(rng, m):
    """Nodes in the box, kept at least 1e-3 away from i."""
    out = []
    while len(out) < m:
        z = complex(rng.uniform(-3, 3), rng.uniform(0.05, 3))
        if abs(z - 1j) > 1e-3:
            out.append(z)
    return out


class TestEntropyValue:
    def test_infinite_value(self):
        s = EntropyValue.infinite()
        assert not s.finite and math.isinf(s.value)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            EntropyValue(True, -1.0)

    def test_rounding_noise_clipped(self):
        assert EntropyValue.of(-1e-17).value == 0.0


class TestEntropy:
    def test_worked_system(self):
        s = entropy_from_system(coupling_of_nodes([2j, 3j]))
        assert s.finite and s.value == pytest.approx(LN6, rel=1e-12)

    def test_example7_system(self):
        assert entropy_from_system(build_model_delta(EX7_NODES)).value == pytest.approx(math.log(5), rel=1e-12)

    def test_node_at_i_infinite(self):
        assert not entropy_from_system(build_multiplication(1j)).finite

    def test_zero_transfer_without_nodes(self):
        s = LSystem([[1j]], [1.0], "multiplication")
        assert not entropy_from_system(s).finite

    def test_nodes_worked(self):
        assert entropy_from_nodes([2j, 3j]).value == pytest.approx(math.log(3) + math.log(2), rel=1e-14)

    def test_nodes_example7(self):
        assert entropy_from_nodes(EX7_NODES).value == pytest.approx(math.log(5), rel=1e-14)

    def test_nodes_at_i(self):
        assert not entropy_from_nodes([2j, 1j]).finite

    def test_decays_to_zero(self):
        values = [entropy_from_nodes([1j * 10.0**-k]).value for k in range(1, 9)]
        assert all(b < a for a, b in zip(values, values[1:]))
        assert values[-1] < 1e-7 and values[-1] > 0

    @pytest.mark.parametrize(
        "lam,s,d",
        [(2j, math.log(3), 8 / 9), (3j, math.log(2), 3 / 4), (1 + 2j, 0.5 * math.log(5), 4 / 5)],
    )
    def test_single_node(self, lam, s, d):
        sv, dv = single_node_invariants(lam)
        assert sv.value == pytest.approx(s, rel=1e-14)
        assert dv == pytest.approx(d, rel=1e-14)

    def test_single_node_at_i(self):
        sv, dv = single_node_invariants(1j)
        assert not sv.finite and dv == 1.0


class TestDissipation:
    def test_from_entropy(self):
        assert dissipation_from_entropy(EntropyValue.of(LN6)) == pytest.approx(35 / 36, rel=1e-14)
        assert dissipation_from_entropy(EntropyValue.of(0.0)) == 0.0
        assert dissipation_from_entropy(EntropyValue.infinite()) == 1.0

    @pytest.mark.parametrize(
        "nodes,d", [((2j, 3j), 35 / 36), (EX7_NODES, 24 / 25), (EX8_NODES, 0.99)]
    )
    def test_from_nodes(self, nodes, d):
        assert dissipation_from_nodes(nodes) == pytest.approx(d, rel=1e-14)

    def test_operator(self):
        assert dissipation_operator(coupling_of_nodes([2j, 3j])) == pytest.approx(35 / 36, rel=1e-13)
        assert dissipation_operator(build_multiplication(2j)) == pytest.approx(8 / 9, rel=1e-14)
        assert dissipation_operator(build_multiplication(1j)) == pytest.approx(1.0, rel=1e-15)

    def test_operator_on_pick_form(self, worked):
        assert dissipation_operator(build_pick_form(worked)) == pytest.approx(35 / 36, rel=1e-12)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10_000), st.integers(1, 6), st.booleans())
    def test_operator_equals_transfer_modulus(self, seed, m, values_i):
        d, gen = sample_problem(seed, m, values_i)
        for s in (build_pick_form(d), gen):
            assert dissipation_operator(s) == pytest.approx(1 - abs(transfer(s, -1j)) ** 2, abs=1e-10)


class TestComposition:
    def test_entropy(self):
        s = compose_entropy(EntropyValue.of(math.log(3)), EntropyValue.of(math.log(2)))
        assert s.value == pytest.approx(LN6, rel=1e-15)
        assert compose_entropy(EntropyValue.of(1.5), EntropyValue.of(0.0)).value == 1.5
        assert not compose_entropy(EntropyValue.of(1.5), EntropyValue.infinite()).finite

    def test_dissipation(self):
        assert compose_dissipation(8 / 9, 3 / 4) == pytest.approx(35 / 36, rel=1e-15)
        assert compose_dissipation(0.3, 0.0) == 0.3
        assert compose_dissipation(0.3, 1.0) == 1.0

    def test_two_node_closed(self):
        assert two_node_dissipation_closed(2j, 3j) == pytest.approx(35 / 36, rel=1e-15)
        assert two_node_dissipation_closed(1j, 1j) == pytest.approx(1.0, rel=1e-15)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 100_000))
    def test_two_node_closed_vs_composition(self, seed):
        lam, mu = random_nodes(np.random.default_rng(seed), 2)
        composed = compose_dissipation(single_node_invariants(lam)[1], single_node_invariants(mu)[1])
        assert two_node_dissipation_closed(lam, mu) == pytest.approx(composed, abs=1e-12)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10_000), st.integers(1, 3), st.integers(1, 3))
    def test_entropy_additive_under_coupling(self, seed, m1, m2):
        rng = np.random.default_rng(seed)
        s1, s2 = coupling_of_nodes(random_nodes(rng, m1)), coupling_of_nodes(random_nodes(rng, m2))
        total = entropy_from_system(couple(s1, s2)).value
        assert total == pytest.approx(entropy_from_system(s1).value + entropy_from_system(s2).value, abs=1e-10)


class TestRouteAgreement:
    def test_random_node_sets(self):
        rng = np.random.default_rng(2024)
        for _ in range(500):
            nodes = random_nodes(rng, int(rng.integers(1, 7)))
            model = build_model_delta(nodes)
            s_sys, s_nodes = entropy_from_system(model), entropy_from_nodes(nodes)
            assert s_sys.value == pytest.approx(s_nodes.value, abs=1e-9)
            d = dissipation_from_nodes(nodes)
            assert dissipation_operator(model) == pytest.approx(d, abs=1e-9)
            assert dissipation_from_entropy(s_sys) == pytest.approx(d, abs=1e-9)


class TestRegimes:
    def test_infinite(self):
        r = classify_regime([1j, 2 + 1j])
        assert r.kind is Regime.INFINITE and r.offending_nodes == [1]

    def test_maximal(self):
        assert classify_regime([2j, 3j]).kind is Regime.MAXIMAL_FINITE

    def test_sub_maximal(self):
        assert classify_regime(EX7_NODES).kind is Regime.SUB_MAXIMAL

    def test_tolerance(self):
        assert classify_regime([1j * (1 + 1e-10)]).kind is Regime.INFINITE
        assert classify_regime([1j * (1 + 1e-6)]).kind is Regime.MAXIMAL_FINITE
        assert classify_regime([1j * (1 + 1e-6)], tol_node=1e-5).kind is Regime.INFINITE
        assert classify_regime([1e-6 + 2j]).kind is Regime.SUB_MAXIMAL

    def test_horizontal_decay(self):
        s = [entropy_from_nodes([a + 2j]).value for a in range(11)]
        assert all(b < a for a, b in zip(s, s[1:]))

    @pytest.mark.parametrize("b", [0.3, 0.9, 1.5, 4.0])
    def test_maximality_on_axis(self, b):
        peak = single_node_invariants(1j * b)[0].value
        for a in (-3.0, -0.1, 1e-3, 0.5, 2.0):
            assert single_node_invariants(a + 1j * b)[0].value < peak

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10_000), st.integers(1, 6))
    def test_entropy_positive(self, seed, m):
        d, gen = sample_problem(seed, m)
        assert entropy_from_system(gen).value > 0
        assert entropy_from_system(build_pick_form(d)).value > 0


class TestImaginaryAxis:
    def test_worked(self):
        s, d = imaginary_axis_invariants([2, 3])
        assert s.value == pytest.approx(LN6, rel=1e-14)
        assert d == pytest.approx(35 / 36, rel=1e-14)

    @pytest.mark.parametrize("a", [0.2, 0.7, 2.5])
    @pytest.mark.parametrize("m", [1, 3, 5])
    def test_linear_in_m(self, a, m):
        s, _ = imaginary_axis_invariants([a] * m)
        assert s.value == pytest.approx(m * math.log(abs((1 + a) / (1 - a))), rel=1e-13)

    def test_small_a(self):
        s, _ = imaginary_axis_invariants([1e-4, 1e-4])
        assert abs(s.value - 4e-4) <= 1e-10

    def test_agrees_with_node_formula(self):
        a = [0.1, 0.5, 2.0, 7.0]
        s, d = imaginary_axis_invariants(a)
        nodes = [1j * x for x in a]
        assert s.value == pytest.approx(entropy_from_nodes(nodes).value, rel=1e-13)
        assert d == pytest.approx(dissipation_from_nodes(nodes), rel=1e-13)

    def test_node_at_i(self):
        with pytest.raises(NodeAtI) as exc:
            imaginary_axis_invariants([2.0, 1.0])
        assert exc.value.index == 2
        s, d = imaginary_axis_invariants([2.0, 1.0], lenient=True)
        assert not s.finite and d == 1.0

    @settings(max_examples=100, deadline=None)
    # below about 1e-6 the bound a^3 drops under the rounding error of S itself
    @given(st.lists(st.floats(1e-5, 1e-2), min_size=1, max_size=6))
    def test_expansion_bound(self, a):
        s, _ = imaginary_axis_invariants(a)
        assert abs(s.value - 2 * sum(a)) <= sum(x**3 for x in a)


class TestKappa:
    def test_example7(self):
        assert compute_kappa(build_model_delta(EX7_NODES)) == pytest.approx(0.2, abs=1e-12)

    def test_boundary(self):
        # a single node at i has Re T = 0, so V(i) = 1/(0 - i) = i
        assert compute_kappa(build_multiplication(1j)) == pytest.approx(0.0, abs=1e-15)

    def test_not_applicable(self):
        # V(i) = 2/(0 - i) = 2i, t = 2 outside (0, 1]
        with pytest.raises(NotApplicable):
            compute_kappa(build_multiplication(2j))

    def test_not_imaginary(self):
        with pytest.raises(NotApplicable):
            compute_kappa(build_multiplication(1 + 1j))
