import itertools
import math

import pytest

from tpfact.errors import (
    BadHPart,
    BadToken,
    MoveNotApplicable,
    NotReducedE,
    NotReducedF,
)
from tpfact.permutations import Permutation, all_permutations
from tpfact.schemes import (
    E,
    F,
    H,
    FactorizationScheme,
    Move,
    SchemeSymbol,
    apply_move,
    available_moves,
    build_arrangement,
    chamber_minor_family,
    enumerate_isotopy_types,
    isotopy_key,
    parse_scheme,
    seed_scheme,
)

RUNNING = "f2 e1 h3 f3 e3 e2 f1 h1 f2 e1 h4 h2 f1"


def all_schemes_of_type(u, v):
    # oracle: every shuffle of a v-word (E), a u-word (F) and an h-order
    n = u.n
    le, lf = v.length(), u.length()
    l = n + le + lf
    out = []
    for ew in sorted(v.reduced_words()):
        for fw in sorted(u.reduced_words()):
            for horder in itertools.permutations(range(1, n + 1)):
                for epos in itertools.combinations(range(l), le):
                    rest = [p for p in range(l) if p not in set(epos)]
                    for fpos in itertools.combinations(rest, lf):
                        word = [None] * l
                        for k, p in enumerate(epos):
                            word[p] = SchemeSymbol(E, ew[k])
                        for k, p in enumerate(fpos):
                            word[p] = SchemeSymbol(F, fw[k])
                        hs = iter(horder)
                        for p in range(l):
                            if word[p] is None:
                                word[p] = SchemeSymbol(H, next(hs))
                        out.append(FactorizationScheme.make(n, tuple(word)))
    return out


def scheme_count(u, v):
    n, le, lf = u.n, v.length(), u.length()
    l = n + le + lf
    shuffles = (math.factorial(l)
                // (math.factorial(le) * math.factorial(lf) * math.factorial(n)))
    return (len(v.reduced_words()) * len(u.reduced_words())
            * math.factorial(n) * shuffles)


def test_parse_and_str_round_trip():
    sch = parse_scheme(RUNNING)
    assert str(sch) == RUNNING
    assert sch.n == 4
    assert sch.length == 13
    assert sch.symbol(1) == SchemeSymbol(F, 2)
    assert sch.symbol(13) == SchemeSymbol(F, 1)


def test_running_example_type():
    sch = parse_scheme(RUNNING)
    assert str(sch.u) == "4312"
    assert str(sch.v) == "4213"
    assert sch.cell_type == (Permutation.from_string("4312"),
                             Permutation.from_string("4213"))


def test_h_positions():
    sch = parse_scheme(RUNNING)
    assert [sch.h_position(j) for j in (1, 2, 3, 4)] == [8, 12, 3, 11]


def test_length_formula():
    for u in all_permutations(3):
        for v in all_permutations(3):
            sch = seed_scheme(u, v)
            assert sch.length == 3 + u.length() + v.length()


def test_validation_errors():
    with pytest.raises(BadHPart):
        parse_scheme("e1 f1")
    with pytest.raises(BadHPart):
        parse_scheme("h1 h1 e1")
    with pytest.raises(BadToken):
        parse_scheme("h1 g2")
    with pytest.raises(BadToken):
        parse_scheme("h1 e3")
    with pytest.raises(NotReducedE):
        parse_scheme("h1 h2 e1 e1")
    with pytest.raises(NotReducedF):
        parse_scheme("h1 h2 f1 f1")


def test_running_example_chambers():
    arr = build_arrangement(parse_scheme(RUNNING))
    lv1 = [(c.sets, c.type) for c in arr.chambers_at_level(1)]
    assert lv1 == [
        ((((3,), (1,))), "EE"),
        ((((3,), (2,))), "EF"),
        ((((2,), (2,))), "FE"),
        ((((2,), (4,))), "EF"),
        ((((1,), (4,))), "FF"),
    ]
    lv2 = [(c.sets, c.type) for c in arr.chambers_at_level(2)]
    assert lv2 == [
        ((((3, 4), (1, 2))), "EF"),
        ((((2, 3), (1, 2))), "FE"),
        ((((2, 3), (2, 4))), "EF"),
        ((((1, 2), (2, 4))), "FF"),
    ]
    lv3 = [c.sets for c in arr.chambers_at_level(3)]
    assert lv3 == [
        ((2, 3, 4), (1, 2, 3)),
        ((1, 2, 3), (1, 2, 3)),
        ((1, 2, 3), (1, 2, 4)),
    ]


def test_border_chambers():
    sch = parse_scheme(RUNNING)
    arr = build_arrangement(sch)
    bottom = arr.chambers_at_level(0)[0]
    top = arr.chambers_at_level(4)[0]
    assert (bottom.start, bottom.end, bottom.type) == (0, 14, "EF")
    assert bottom.sets == ((), ())
    assert top.sets == ((1, 2, 3, 4), (1, 2, 3, 4))
    # one chamber per word symbol plus the empty bottom chamber
    assert len(arr.chambers) == sch.length + 1


def test_running_example_family():
    fam = chamber_minor_family(parse_scheme(RUNNING))
    assert fam == [
        ((1,), (3,)), ((1,), (2,)), ((3,), (2,)), ((3,), (1,)), ((4,), (1,)),
        ((1, 2), (2, 3)), ((1, 3), (2, 3)), ((1, 3), (1, 2)), ((3, 4), (1, 2)),
        ((1, 2, 3), (2, 3, 4)), ((1, 3, 4), (2, 3, 4)), ((1, 3, 4), (1, 2, 3)),
        ((1, 2, 3, 4), (1, 2, 3, 4)),
    ]


def test_gl2_families_depend_on_crossing_order():
    fam_f_first = chamber_minor_family(parse_scheme("h1 f1 h2 e1"))
    fam_e_first = chamber_minor_family(parse_scheme("h1 e1 h2 f1"))
    assert set(fam_f_first) == {
        ((1,), (2,)), ((2,), (2,)), ((2,), (1,)), ((1, 2), (1, 2))}
    assert set(fam_e_first) == {
        ((1,), (1,)), ((1,), (2,)), ((2,), (1,)), ((1, 2), (1, 2))}


def test_crossing_lines_and_bullets():
    arr = build_arrangement(parse_scheme(RUNNING))
    assert arr.crossing_lines(2) == (1, 2)
    with pytest.raises(BadToken):
        arr.crossing_lines(3)
    assert arr.e_line_through_bullet(3) == 3
    assert arr.f_line_through_bullet(3) == 4
    with pytest.raises(BadToken):
        arr.e_line_through_bullet(1)


def test_trivial2_moves():
    sch = parse_scheme("e1 f2 h1 h2 h3")
    out = apply_move(sch, Move("trivial2", 1))
    assert str(out) == "f2 e1 h1 h2 h3"
    assert isotopy_key(out) == isotopy_key(sch)
    out2 = apply_move(sch, Move("trivial2", 3))
    assert str(out2) == "e1 f2 h2 h1 h3"
    assert isotopy_key(out2) == isotopy_key(sch)


def test_trivial2_rejects_close_indices():
    # same-kind neighbors need |i-j| >= 2; same-index e/f is the mixed move
    sch = parse_scheme("h1 h2 h3 h4 e1 e2")
    with pytest.raises(MoveNotApplicable):
        apply_move(sch, Move("trivial2", 5))
    with pytest.raises(MoveNotApplicable):
        apply_move(parse_scheme("e1 f1 h1 h2"), Move("trivial2", 1))
    far = parse_scheme("h1 h2 h3 h4 e1 e3")
    assert str(apply_move(far, Move("trivial2", 5))) == "h1 h2 h3 h4 e3 e1"


def test_braid3_move():
    sch = parse_scheme("e1 e2 e1 f1 f2 f1 h1 h2 h3")
    out = apply_move(sch, Move("braid3", 1))
    assert str(out) == "e2 e1 e2 f1 f2 f1 h1 h2 h3"
    with pytest.raises(MoveNotApplicable):
        apply_move(sch, Move("braid3", 2))
    with pytest.raises(MoveNotApplicable):
        apply_move(sch, Move("braid3", 3))


def test_mixed2_move():
    sch = parse_scheme("h1 e1 f1 h2")
    out = apply_move(sch, Move("mixed2", 2))
    assert str(out) == "h1 f1 e1 h2"
    assert str(apply_move(out, Move("mixed2", 2))) == str(sch)


def test_exchange_moves_swap_one_family_member():
    sch = parse_scheme("e1 e2 e1 f1 f2 f1 h1 h2 h3")
    for mv in available_moves(sch):
        out = apply_move(sch, mv)
        before = sorted(chamber_minor_family(sch))
        after = sorted(chamber_minor_family(out))
        if mv.kind == "trivial2":
            assert before == after
        else:
            diff = set(before) ^ set(after)
            assert len(diff) == 2


def test_available_moves_positions():
    sch = parse_scheme("h1 e1 f1 h2")
    kinds = {(m.kind, m.position) for m in available_moves(sch)}
    assert kinds == {("trivial2", 1), ("mixed2", 2), ("trivial2", 3)}


def test_moves_preserve_type():
    sch = parse_scheme(RUNNING)
    for mv in available_moves(sch):
        out = apply_move(sch, mv)
        assert out.cell_type == sch.cell_type


def test_seed_scheme_every_s3_cell():
    for u in all_permutations(3):
        for v in all_permutations(3):
            sch = seed_scheme(u, v)
            assert sch.cell_type == (u, v)


def test_enumerate_gl2_open_cell():
    w0 = Permutation.longest_element(2)
    graph = enumerate_isotopy_types(w0, w0)
    assert len(graph.nodes) == 2
    assert graph.is_connected()
    families = {tuple(sorted(node.family)) for node in graph.nodes}
    assert families == {
        tuple(sorted({((1,), (2,)), ((2,), (2,)), ((2,), (1,)), ((1, 2), (1, 2))})),
        tuple(sorted({((1,), (1,)), ((1,), (2,)), ((2,), (1,)), ((1, 2), (1, 2))})),
    }


def test_enumerate_identity_cell():
    e3 = Permutation.identity(3)
    graph = enumerate_isotopy_types(e3, e3)
    assert len(graph.nodes) == 1
    assert graph.edges == set()
    node = graph.nodes[0]
    assert sorted(node.family) == [
        ((1,), (1,)), ((1, 2), (1, 2)), ((1, 2, 3), (1, 2, 3))]


def test_enumerate_matches_shuffle_oracle_small():
    # brute-force every scheme word and quotient by the isotopy key
    for u_str, v_str in [("21", "21"), ("213", "132"), ("231", "231"),
                         ("321", "213")]:
        u = Permutation.from_string(u_str)
        v = Permutation.from_string(v_str)
        schemes = all_schemes_of_type(u, v)
        assert len(schemes) == scheme_count(u, v)
        keys = {isotopy_key(s) for s in schemes}
        graph = enumerate_isotopy_types(u, v)
        assert {node.key for node in graph.nodes} == keys


def test_enumerate_matches_shuffle_oracle_open_gl3():
    w0 = Permutation.longest_element(3)
    schemes = all_schemes_of_type(w0, w0)
    assert len(schemes) == scheme_count(w0, w0) == 40320
    keys = {isotopy_key(s) for s in schemes}
    graph = enumerate_isotopy_types(w0, w0)
    assert len(keys) == 34
    assert {node.key for node in graph.nodes} == keys
    assert graph.is_connected()
