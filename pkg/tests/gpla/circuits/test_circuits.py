from __future__ import annotations

from fractions import Fraction

import pytest

from gpla.circuits import (
    Ammeter,
    CircuitParseError,
    Diode,
    E,
    EId,
    Elem,
    EPar,
    ESeq,
    ESwap,
    InvalidElement,
    OpenEnd,
    Port,
    PortMismatch,
    RDiode,
    Resistor,
    S,
    SId,
    Start,
    compile_circuit,
    parallel,
    parse_circuit,
    ports,
    series,
    solve,
    stack,
    transistor,
)
from gpla.decide import Holds, equal, subset
from gpla.polyhedron import LinExpr, Polyhedron, Range, range_of
from gpla.semantics import PLRelation, compose_rel, empty_rel, evaluate, identity_rel, member
from gpla.stdlib import relu_term
from gpla.term import Arity, scl, seq

F = Fraction

LOOP_CURRENT = (
    "(start & swire) ; (split & swire) ; (ewire & sw(e,s)) ; (res(1) & vsrc)"
    " ; (ewire & res(1)) ; (ewire & amm) ; (merge & swire) ; (open & swire)"
)
# The ground node is split three ways: R2 to the midpoint, the source and R1
# to the midpoint, and a plain wire that the voltmeter is read against.
DIVIDER = (
    "(start & swire) ; (split & swire) ; (ewire & split & swire)"
    " ; (ewire & ewire & sw(e,s)) ; (ewire & sw(e,s) & ewire)"
    " ; (res(1) & vsrc & ewire) ; (ewire & res(1) & ewire) ; (merge & ewire)"
    " ; (vmm & ewire) ; (ewire & sw(s,e)) ; (merge & swire) ; (open & swire)"
)
HALF_WAVE = (
    "(start & swire) ; (split & swire) ; (ewire & sw(e,s)) ; (ewire & vsrc)"
    " ; (ewire & diode) ; (ewire & res(1)) ; (ewire & amm) ; (merge & swire)"
    " ; (open & swire)"
)


def _point(*values) -> tuple[Fraction, ...]:
    return tuple(F(v) for v in values)


class TestPorts:
    def test_widths(self):
        assert Port.ELECTRICAL.width == 2
        assert Port.SIGNAL.width == 1

    def test_boundaries(self):
        assert ports(Elem(Ammeter())) == ((E,), (E, S))
        assert ports(ESwap(E, S)) == ((E, S), (S, E))
        assert ports(EPar(EId(), SId())) == ((E, S), (E, S))

    def test_series_mismatch(self):
        with pytest.raises(PortMismatch) as info:
            ESeq(Elem(Ammeter()), Elem(Resistor(1)))
        assert isinstance(info.value, TypeError)

    def test_parallel_needs_two_terminal_branches(self):
        with pytest.raises(PortMismatch):
            parallel(Elem(Ammeter()), EId())

    def test_negative_resistance(self):
        with pytest.raises(InvalidElement):
            Resistor(-1)


class TestElements:
    def test_resistor(self):
        r = solve(Elem(Resistor(2)))
        assert r.arity == Arity(2, 2)
        assert member(_point(3, 1, 1, 1), r)
        assert not member(_point(3, 1, 1, 2), r)

    def test_diode_cells(self):
        r = solve(Elem(Diode()))
        assert len(r) == 2
        drop, current = LinExpr([1, 0, -1, 0], 0), LinExpr([0, 1, 0, 0], 0)
        zero = Range(F(0), F(0))
        for cell in r.polys:
            assert range_of(cell, drop) == zero or range_of(cell, current) == zero

    def test_diode_conducts_one_way(self):
        forward, backward = solve(Elem(Diode())), solve(Elem(RDiode()))
        assert member(_point(0, 1, 0, 1), forward)
        assert not member(_point(0, -1, 0, -1), forward)
        assert member(_point(0, -1, 0, -1), backward)

    def test_dangling_ends_carry_no_current(self):
        for r in (solve(Elem(OpenEnd())), solve(Elem(Start()))):
            assert member(_point(5, 0), r)
            assert member(_point(-2, 0), r)
            assert not member(_point(5, 1), r)

    def test_wire_and_swap(self):
        assert equal(solve(EId()), identity_rel(2)) == Holds()
        r = solve(ESwap(E, S))
        assert member(_point(1, 2, 3, 3, 1, 2), r)


class TestCompiler:
    def test_compositional(self):
        a, b = Elem(Resistor(1)), Elem(Diode())
        assert compile_circuit(ESeq(a, b)) == seq(compile_circuit(a), compile_circuit(b))
        assert equal(solve(series(a, b)), compose_rel(solve(a), solve(b))) == Holds()

    def test_stack_widths(self):
        c = stack(EId(), SId(), EId())
        assert compile_circuit(c).arity == Arity(5, 5)


class TestWorkedCircuits:
    def test_voltage_divider(self):
        r = solve(parse_circuit(DIVIDER))
        assert r.arity == Arity(1, 1)
        assert len(r) == 1
        # (v_in, v_mid) with v_mid = v_in / 2
        half = PLRelation(Arity(1, 1), (Polyhedron.build(2, eq=[[1, -2, 0]]),))
        assert equal(r, half) == Holds()
        assert member(_point(4, 2), r)

    def test_loop_current(self):
        r = solve(parse_circuit(LOOP_CURRENT))
        assert equal(r, evaluate(scl(F(1, 2)))) == Holds()

    def test_half_wave_rectifier(self):
        r = solve(parse_circuit(HALF_WAVE))
        assert equal(r, evaluate(relu_term())) == Holds()

    def test_anti_parallel_diodes(self):
        r = solve(parallel(Elem(Diode()), Elem(RDiode())))
        assert equal(r, identity_rel(2)) == Holds()


# Transistor boundary: (ve, ie, vc, ic, vb, ib).
ZERO_CURRENTS = PLRelation(
    Arity(4, 2),
    (
        Polyhedron.build(
            6, eq=[[0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1, 0]]
        ),
    ),
)


def _restrict(r: PLRelation, ge=(), eq=()) -> PLRelation:
    region = Polyhedron.build(r.dim, ge=ge, eq=eq)
    return PLRelation(r.arity, tuple(p.intersect(region) for p in r.polys))


class TestTransistor:
    def test_shape(self):
        c = transistor()
        assert c.left == (E, E)
        assert c.right == (E,)
        r = solve(c)
        assert len(r) >= 2
        assert member(_point(0, 1, 5, 1, 0, 2), r)
        assert member(_point(-1, 0, 7, 0, 0, 0), r)
        assert not member(_point(0, 1, 0, 2, 0, 3), r)
        assert not member(_point(-1, 1, 0, 1, 0, 2), r)

    def test_collector_mirrors_emitter(self):
        r = solve(transistor())
        mirrored = PLRelation(
            Arity(4, 2), (Polyhedron.build(6, eq=[[0, 1, 0, -1, 0, 0, 0]]),)
        )
        assert subset(r, mirrored) == Holds()

    def test_blocking_cells_carry_no_current(self):
        r = solve(transistor())
        zero = Range(F(0), F(0))
        blocking = [p for p in r.polys if range_of(p, LinExpr([0, 1, 0, 0, 0, 0], 0)) == zero]
        assert blocking
        for cell in blocking:
            assert range_of(cell, LinExpr([0, 0, 0, 1, 0, 0], 0)) == zero
            assert range_of(cell, LinExpr([0, 0, 0, 0, 0, 1], 0)) == zero

    def test_reverse_biased_region(self):
        # vb >= ve + 1 leaves only the diode's blocking cell
        reverse = _restrict(solve(transistor()), ge=[[-1, 0, 0, 0, 1, 0, -1]])
        assert member(_point(-1, 0, 7, 0, 0, 0), reverse)
        assert subset(reverse, ZERO_CURRENTS) == Holds()

    def test_grounded_base(self):
        r = solve(transistor())
        negative = _restrict(r, ge=[[-1, 0, 0, 0, 0, 0, -1]], eq=[[0, 0, 0, 0, 1, 0, 0]])
        assert member(_point(-2, 0, 3, 0, 0, 0), negative)
        same_current = PLRelation(
            Arity(4, 2), (Polyhedron.build(6, eq=[[0, 1, 0, -1, 0, 0, 0]]),)
        )
        assert subset(negative, same_current) == Holds()
        assert subset(negative, ZERO_CURRENTS) == Holds()

        positive = _restrict(r, ge=[[1, 0, 0, 0, 0, 0, -1]], eq=[[0, 0, 0, 0, 1, 0, 0]])
        assert subset(positive, empty_rel(4, 2)) == Holds()


class TestParseCircuit:
    def test_atoms(self):
        assert parse_circuit("res(1/2)") == Elem(Resistor(F(1, 2)))
        assert parse_circuit("sw") == ESwap()
        assert parse_circuit("sw(s, e)") == ESwap(S, E)
        assert parse_circuit("ewire & swire") == EPar(EId(), SId())

    @pytest.mark.parametrize(
        "text", ["res", "res(-1)", "frob", "diode(1)", "sw(e)", "ewire(2)", "diode | diode"]
    )
    def test_rejects(self, text):
        with pytest.raises(CircuitParseError):
            parse_circuit(text)

    def test_port_mismatch_surfaces(self):
        with pytest.raises(PortMismatch):
            parse_circuit("amm ; res(1)")
