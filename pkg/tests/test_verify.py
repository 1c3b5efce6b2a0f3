import json
import math

import numpy as np
import pytest

from conftest import SINGLE, dense, oracle_target, oracle_unitary
from paulidecomp.circuit import QUARTER, Angle, Circuit, Gate
from paulidecomp.decompose import decompose, decompose_general, decompose_path, decompose_star
from paulidecomp.errors import DimensionError, InvalidOperatorError, ShapeError
from paulidecomp.graph import path_graph, random_connected_graph, star_graph
from paulidecomp.lhz import LhzProblem, build_problem_circuit
from paulidecomp.pauli import PauliString
from paulidecomp.verify import (
    apply_circuit,
    circuit_unitary,
    correlation_check,
    correlation_errors,
    fold,
    numeric_verify,
    pauli_action,
    random_product_states,
    random_state,
    statevector_verify,
    symbolic_verify,
    verify,
)

P = PauliString.from_str
PLAQUETTE = decompose_path(P("ZZZZ"), [0, 1, 3, 2], 2)


def flip_sign(c: Circuit, i: int) -> Circuit:
    gates = list(c.gates)
    gates[i] = gates[i].with_angle(-gates[i].angle)
    return Circuit(c.n, gates)


class TestEngine:
    def test_pauli_action_matches_dense(self, rng):
        for n in range(1, 6):
            for _ in range(10):
                p = PauliString.from_letters("".join(rng.choice(list("IXYZ"), n)), complex(rng.choice([1, -1, 1j, -1j])))
                psi = random_state(n, rng)
                np.testing.assert_allclose(pauli_action(psi, p), dense(p) @ psi, atol=1e-12)

    def test_pauli_action_on_matrices(self):
        np.testing.assert_allclose(pauli_action(np.eye(4, dtype=complex), P("XZ")), dense(P("XZ")), atol=1e-12)

    def test_circuit_unitary_matches_oracle(self, rng):
        c = decompose_general(P("XYZYX"), random_connected_graph(5, rng, 0.3))
        np.testing.assert_allclose(circuit_unitary(c, 0.8), oracle_unitary(c, 0.8), atol=1e-12)

    def test_cnot(self):
        c = Circuit(2, [Gate.cnot(1, 0)])
        u = circuit_unitary(c)
        assert u[1, 3] == 1 and u[3, 1] == 1 and u[0, 0] == 1

    def test_dimension_checks(self):
        with pytest.raises(DimensionError):
            pauli_action(np.ones(3), P("X"))
        with pytest.raises(DimensionError):
            circuit_unitary(Circuit(13))


class TestSymbolic:
    def test_plaquette(self):
        assert symbolic_verify(PLAQUETTE, P("ZZZZ"))
        assert fold(PLAQUETTE) == P("ZZZZ")
        assert not symbolic_verify(PLAQUETTE, P("-ZZZZ"))

    def test_flipped_conjugator(self):
        assert not symbolic_verify(flip_sign(PLAQUETTE, 0), P("ZZZZ"))

    def test_flipped_center_sign(self):
        assert symbolic_verify(flip_sign(PLAQUETTE, 2), P("-ZZZZ"))

    def test_shape_errors(self):
        with pytest.raises(ShapeError):
            symbolic_verify(Circuit(4, PLAQUETTE.gates[:4]), P("ZZZZ"))
        with pytest.raises(ShapeError):
            symbolic_verify(Circuit(2, [Gate.cnot(0, 1)]), P("ZZ"))
        swapped = list(PLAQUETTE.gates)
        swapped[0], swapped[1] = swapped[1], swapped[0]
        with pytest.raises(ShapeError):
            symbolic_verify(Circuit(4, swapped), P("ZZZZ"))

    def test_random_graphs_large(self, rng):
        for _ in range(50):
            n = int(rng.integers(2, 33))
            g = random_connected_graph(n, rng, 0.1)
            p = PauliString.from_letters("".join(rng.choice(list("XYZ"), n)), int(rng.choice([1, -1])))
            assert symbolic_verify(decompose(p, g), p)

    def test_no_false_positives(self, rng):
        for _ in range(1000):
            n = int(rng.integers(2, 7))
            g = random_connected_graph(n, rng, 0.3)
            p = PauliString.from_letters("".join(rng.choice(list("XYZ"), n)), int(rng.choice([1, -1])))
            c = decompose_general(p, g)
            if len(c) > 1 and rng.random() < 0.5:
                # corrupt a mirrored conjugator pair consistently, keeping the nested shape
                i = int(rng.integers(len(c) // 2))
                gates = list(c.gates)
                letters = "".join(rng.choice(list("XYZ"), 2))
                for j in (i, len(c) - 1 - i):
                    gates[j] = Gate(gates[j].qubits, letters, gates[j].angle)
                c = Circuit(n, gates)
            ok = symbolic_verify(c, p)
            err = numeric_verify(c, p, [0.37, 1.3])
            assert (err < 1e-9) == ok


class TestNumeric:
    def test_plaquette(self):
        assert numeric_verify(PLAQUETTE, P("ZZZZ"), [0.37, math.pi / 4, 1.0]) < 1e-12

    def test_empty_circuit_at_zero(self):
        assert numeric_verify(Circuit(3), P("XYZ"), [0.0]) == 0.0

    def test_corruption_detected(self):
        assert numeric_verify(flip_sign(PLAQUETTE, 0), P("ZZZZ"), [0.37, 1.0]) >= 1e-2

    def test_size_cap(self):
        with pytest.raises(DimensionError):
            numeric_verify(Circuit(13), PauliString.from_letters("Z" * 13), [0.1])

    def test_agrees_with_statevector(self, rng):
        for n in range(2, 11):
            p = PauliString.from_letters("".join(rng.choice(list("XYZ"), n)))
            c = decompose(p, random_connected_graph(n, rng, 0.2))
            gammas = list(rng.uniform(-3, 3, 2))
            a = numeric_verify(c, p, gammas)
            b = statevector_verify(c, p, trials=2, gammas=gammas)
            assert a < 1e-9 and b < 1e-9
            bad = flip_sign(c, 0) if len(c) > 1 else c.with_gates([c.gates[0].with_angle(-c.gates[0].angle)])
            assert numeric_verify(bad, p, gammas) > 1e-3 and statevector_verify(bad, p, 2, gammas) > 1e-3


class TestStatevector:
    def test_empty(self):
        assert statevector_verify(Circuit(4), PauliString.from_letters("ZZZZ"), gammas=[0.0]) == 0.0

    def test_lhz_two_by_two(self, rng):
        p = LhzProblem.random(2, 2, rng)
        assert statevector_verify(build_problem_circuit(p), p.terms(), trials=3) < 1e-10

    def test_lhz_column_sixteen_qubits(self, rng):
        p = LhzProblem.random(7, 1, rng)
        assert p.n == 16
        assert statevector_verify(build_problem_circuit(p), p.terms(), trials=1) < 1e-10

    def test_size_cap(self):
        with pytest.raises(DimensionError):
            statevector_verify(Circuit(21), PauliString.from_letters("Z" * 21))


class TestCorrelation:
    def test_four_qubits(self, rng):
        c = decompose_path(P("XXXX"), range(4))
        assert correlation_check(c, P("XXXX"), random_product_states(4, 100, rng))

    def test_all_zero_state(self):
        c = decompose_path(P("XXX"), range(3))
        zero = np.array([[1, 0]] * 3, dtype=complex)
        assert correlation_errors(c, P("XXX"), [zero]) < 1e-12
        psi = np.zeros(8, dtype=complex)
        psi[0] = 1
        out = apply_circuit(psi, c, -math.pi / 4)
        z_first = np.abs(out[:4]) ** 2 @ np.ones(4) - np.abs(out[4:]) ** 2 @ np.ones(4)
        assert abs(z_first) < 1e-12

    def test_two_qubit_dense(self, rng):
        u = oracle_target(P("XX"), -math.pi / 4)
        for v in random_product_states(2, 20, rng):
            out = u @ np.kron(v[0], v[1])
            ex = [float(np.real(w.conj() @ SINGLE["X"] @ w)) for w in v]
            ey = [float(np.real(w.conj() @ SINGLE["Y"] @ w)) for w in v]
            z0 = float(np.real(out.conj() @ np.kron(SINGLE["Z"], SINGLE["I"]) @ out))
            z1 = float(np.real(out.conj() @ np.kron(SINGLE["I"], SINGLE["Z"]) @ out))
            assert abs(z0 - ey[0] * ex[1]) < 1e-12 and abs(z1 - ey[1] * ex[0]) < 1e-12
            c = decompose_path(P("XX"), [0, 1])
            assert correlation_errors(c, P("XX"), [v]) < 1e-12

    @pytest.mark.parametrize("builder", ["path", "star", "general"])
    def test_strategies(self, builder, rng):
        n = 7
        p = PauliString.from_letters("X" * n)
        if builder == "path":
            c = decompose_path(p, range(n))
        elif builder == "star":
            c = decompose_star(p, 0, range(1, n), star_graph(n))
        else:
            c = decompose_general(p, random_connected_graph(n, rng, 0.3))
        assert correlation_check(c, p, random_product_states(n, 20, rng))

    def test_wrong_target(self, rng):
        c = decompose_path(P("ZZ"), [0, 1])
        with pytest.raises(InvalidOperatorError):
            correlation_check(c, P("ZZ"), random_product_states(2, 1, rng))

    def test_broken_circuit_fails(self, rng):
        c = flip_sign(decompose_path(P("XXXX"), range(4)), 0)
        assert not correlation_check(c, P("XXXX"), random_product_states(4, 10, rng))


class TestReport:
    def test_modes(self):
        for mode in ("symbolic", "numeric", "statevector"):
            rep = verify(PLAQUETTE, P("ZZZZ"), mode, seed=3)
            assert rep.passed and rep.n == 4 and rep.gate_count == 5 and rep.depth == 3
            data = json.loads(rep.to_json())
            assert set(data) == {"mode", "n", "gate_count", "depth", "max_error", "seed", "passed"}

    def test_seed_reproducible(self):
        c = decompose(P("XYZX"), path_graph(4))
        assert verify(c, P("XYZX"), "statevector", seed=5) == verify(c, P("XYZX"), "statevector", seed=5)

    def test_failure_reported(self):
        rep = verify(flip_sign(PLAQUETTE, 0), P("ZZZZ"), "numeric")
        assert not rep.passed and rep.max_error > 1e-2

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            verify(PLAQUETTE, P("ZZZZ"), "magic")
