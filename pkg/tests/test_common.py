"""
Tests for number parsing and JSON conversion helpers.
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import mpmath
import pytest

from hodge_atlas.models.domain_models import CMState
from hodge_atlas.utils.common import convert, parse_complex, parse_list, to_json


class TestParseComplex:

    @pytest.mark.parametrize(
        "text, expected",
        [("0.3", "0.3"), ("1/2", "1/2"), ("0.2+0.1i", "0.2+0.1j"), ("-i", "-1j"), ("i", "1j"), (" 2 I ", "2j")],
    )
    def test_normalizes(self, text, expected):
        assert parse_complex(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1/0", "1/x"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_complex(text)

    def test_list(self):
        assert parse_list("0.1, 0.2+i,") == ["0.1", "0.2+1j"]


class TestJson:

    def test_convert_plain_values(self):
        assert convert(Fraction(1, 3)) == "1/3"
        assert convert(CMState.CM) == "CM"
        assert convert((1, [2, 3])) == [1, [2, 3]]
        assert convert({1: "a"}) == {"1": "a"}

    def test_reals_are_strings(self):
        with mpmath.workdps(20):
            data = convert(mpmath.mpc(1, 2))
        assert data == {"re": "1.0", "im": "2.0"}

    def test_keys_sorted(self):
        text = to_json({"b": 1, "a": 2})
        assert text.index('"a"') < text.index('"b"')
        assert json.loads(text) == {"a": 2, "b": 1}
