"""Space file parsing, serialization, and round-trips."""

from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from softtop import (
    SoftContext,
    SpaceParseError,
    parse_space_file,
    serialize_space_file,
    space_file_for,
)
from softtop.search import SplitMix64, make_context, random_space_from

SPACES = Path(__file__).resolve().parent.parent / "spaces"


class TestShippedFiles:
    def test_ex33_parses_and_validates(self, ex33):
        sf = parse_space_file((SPACES / "ex33.space").read_text())
        top = sf.build_topology()
        assert top == ex33.topology
        assert sf.sets["H"] == ex33.sets["H"]

    def test_all_shipped_files_parse(self):
        for path in sorted(SPACES.glob("*.space")):
            sf = parse_space_file(path.read_text())
            sf.build_topology()

    def test_indiscrete_keyword(self):
        sf = parse_space_file((SPACES / "indiscrete3.space").read_text())
        assert sf.topology_keyword == "indiscrete"
        assert len(sf.build_topology().members) == 2


class TestParsing:
    def test_discrete_keyword(self):
        sf = parse_space_file(
            "universe: x1 x2\nparams: e1\ntopology: discrete\n"
        )
        assert len(sf.build_topology().members) == 4

    def test_omitted_params_default_to_empty(self):
        sf = parse_space_file(
            "universe: x1\nparams: e1 e2\nset A { e2 = { x1 } }\ntopology: A\n"
        )
        assert sf.sets["A"].families() == (frozenset(), frozenset({0}))

    def test_empty_braces_are_the_empty_set(self):
        sf = parse_space_file(
            "universe: x1\nparams: e1\nset A { e1 = {} }\ntopology: A\n"
        )
        assert sf.sets["A"].is_null()

    def test_comments_and_blank_lines(self):
        text = "\n# leading comment\nuniverse: x1 # trailing\n\nparams: e1\ntopology: indiscrete\n"
        sf = parse_space_file(text)
        assert sf.context == SoftContext(("x1",), ("e1",))

    def test_undefined_reference_names_identifier_and_position(self):
        text = "universe: x1\nparams: e1\ntopology: Missing\n"
        with pytest.raises(SpaceParseError) as err:
            parse_space_file(text)
        assert "Missing" in str(err.value)
        assert err.value.line == 3
        assert err.value.column == 11

    def test_duplicate_set_name_rejected(self):
        text = (
            "universe: x1\nparams: e1\n"
            "set A { e1 = { x1 } }\nset A { e1 = {} }\ntopology: A\n"
        )
        with pytest.raises(SpaceParseError) as err:
            parse_space_file(text)
        assert err.value.line == 4

    def test_duplicate_universe_rejected(self):
        text = "universe: x1\nuniverse: x2\nparams: e1\ntopology: indiscrete\n"
        with pytest.raises(SpaceParseError) as err:
            parse_space_file(text)
        assert err.value.line == 2

    def test_undeclared_element_rejected_with_column(self):
        text = "universe: x1\nparams: e1\nset A { e1 = { x9 } }\ntopology: A\n"
        with pytest.raises(SpaceParseError) as err:
            parse_space_file(text)
        assert err.value.line == 3
        assert err.value.column == 16

    def test_undeclared_parameter_rejected(self):
        text = "universe: x1\nparams: e1\nset A { e9 = { x1 } }\ntopology: A\n"
        with pytest.raises(SpaceParseError):
            parse_space_file(text)

    def test_sets_before_declarations_rejected(self):
        text = "set A { e1 = {} }\nuniverse: x1\nparams: e1\ntopology: A\n"
        with pytest.raises(SpaceParseError) as err:
            parse_space_file(text)
        assert err.value.line == 1

    def test_missing_topology_rejected(self):
        with pytest.raises(SpaceParseError) as err:
            parse_space_file("universe: x1\nparams: e1\n")
        assert "topology" in str(err.value)

    def test_malformed_set_body(self):
        text = "universe: x1\nparams: e1\nset A e1 = { x1 }\ntopology: A\n"
        with pytest.raises(SpaceParseError) as err:
            parse_space_file(text)
        assert err.value.line == 3

    def test_unknown_directive(self):
        with pytest.raises(SpaceParseError) as err:
            parse_space_file("warp: 9\n")
        assert err.value.line == 1 and err.value.column == 1


class TestRoundTrip:
    def test_shipped_files_round_trip(self):
        for path in sorted(SPACES.glob("*.space")):
            sf = parse_space_file(path.read_text())
            again = parse_space_file(serialize_space_file(sf))
            assert again == sf

    def test_topology_round_trip_via_generated_names(self, ex33):
        sf = space_file_for(ex33.topology, extra_sets={"H": ex33.sets["H"]})
        again = parse_space_file(serialize_space_file(sf))
        assert again.build_topology() == ex33.topology
        assert again.sets["H"] == ex33.sets["H"]

    def test_keyword_collapse(self):
        from softtop import discrete, indiscrete

        ctx = make_context(2, 2)
        assert space_file_for(indiscrete(ctx)).topology_keyword == "indiscrete"
        assert space_file_for(discrete(ctx)).topology_keyword == "discrete"

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32))
    def test_random_spaces_round_trip(self, seed):
        rng = SplitMix64(seed)
        ctx = make_context(1 + rng.below(3), 1 + rng.below(2))
        top = random_space_from(rng, ctx, rng.below(101) / 100.0)
        sf = space_file_for(top)
        text = serialize_space_file(sf)
        again = parse_space_file(text)
        assert again == sf
        assert again.build_topology() == top
        # serialization is stable
        assert serialize_space_file(again) == text
