import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from npls.errors import InvalidData, ValueNotInUpperHalfPlane
from npls.pick import validate_data
from npls.realizations import build_model_delta, build_pick_form, coupling_of_nodes, sample_problem
from npls.serialize import (
    data_from_json,
    data_to_json,
    grid_csv,
    report_to_json,
    round_sig,
    system_from_json,
    system_to_json,
)


class TestDataJson:
    def test_parse_defaults_values(self):
        d = data_from_json('{"nodes":[{"re":0.0,"im":2.0},{"re":0,"im":3}]}')
        np.testing.assert_array_equal(d.nodes, [2j, 3j])
        assert d.values_defaulted

    def test_round_trip(self):
        d = validate_data([0.5 + 1.5j, -1 + 0.7j], [0.3 + 1.2j, -0.4 + 0.9j])
        back = data_from_json(data_to_json(d))
        np.testing.assert_array_equal(back.nodes, d.nodes)
        np.testing.assert_array_equal(back.values, d.values)

    def test_defaulted_round_trip_omits_values(self):
        assert "values" not in json.loads(data_to_json(validate_data([2j])))

    @pytest.mark.parametrize(
        "text",
        ["not json", "[]", '{"nodes": 3}', '{"nodes": [{"re": 1}]}', '{"nodes": [{"re": "a", "im": 1}]}',
         '{"nodes": [{"re": 0, "im": 1}], "values": 5}'],
    )
    def test_malformed(self, text):
        with pytest.raises(InvalidData):
            data_from_json(text)

    def test_validation_applies(self):
        with pytest.raises(ValueNotInUpperHalfPlane):
            data_from_json('{"nodes":[{"re":0,"im":2}],"values":[{"re":0,"im":-1}]}')


class TestSystemJson:
    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10_000), st.integers(1, 6))
    def test_bit_exact_round_trip(self, seed, m):
        d, gen = sample_problem(seed, m)
        for s in (build_pick_form(d), gen):
            back = system_from_json(system_to_json(s))
            assert back.form == s.form
            np.testing.assert_array_equal(back.T, s.T)
            np.testing.assert_array_equal(back.K, s.K)
            if s.metric is None:
                assert back.metric is None
            else:
                np.testing.assert_array_equal(back.metric, s.metric)

    def test_schema(self):
        obj = json.loads(system_to_json(build_model_delta([2j, 3j])))
        assert set(obj) == {"form", "T", "K", "metric"}
        assert obj["form"] == "model_delta" and obj["metric"] is None
        assert obj["T"][0][1]["im"] == pytest.approx(2 * math.sqrt(6))

    @pytest.mark.parametrize(
        "text", ['{"form":"other","T":[],"K":[]}', '{"form":"coupling","T":[[{"re":1,"im":0}]],"K":[]}', "x"]
    )
    def test_invalid(self, text):
        with pytest.raises(InvalidData):
            system_from_json(text)


class TestReports:
    def test_round_sig(self):
        assert round_sig(1 / 3) == 0.333333333333
        assert round_sig(0.0) == 0.0

    def test_infinity_as_string(self):
        obj = json.loads(report_to_json({"entropy": {"finite": False, "value": math.inf}, "kappa": None}))
        assert obj == {"entropy": {"finite": False, "value": "inf"}, "kappa": None}

    def test_numpy_scalars(self):
        assert json.loads(report_to_json({"x": np.float64(2 / 3), "n": 3})) == {"x": 0.666666666667, "n": 3}

    def test_grid_csv(self):
        text = grid_csv([-1j, 1 + 1j], [1 / 6, None])
        assert text == "z_re,z_im,f_re,f_im\n0,-1,0.166666666667,0\n1,1,nan,nan\n"
