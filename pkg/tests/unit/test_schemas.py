"""
Unit tests for wire schemas and input loading.
"""

import json
from decimal import Decimal
from fractions import Fraction

import pytest
from pydantic import ValidationError

from riskpref.cli.loader import load, read_json
from riskpref.core.exceptions import InputValidationError, MalformedDatasetError
from riskpref.models import ElicitationMode, StepQuantile
from riskpref.schemas import (
    DistortionSchema,
    MeasureSchema,
    PreferenceDatasetSchema,
    QuantileSchema,
    UtilitySchema,
)


@pytest.mark.unit
class TestSchemas:
    """Test schema validation and model conversion."""

    def test_measure_exact_decimals(self):
        data = json.loads(
            '{"atoms": [{"point": 0, "mass": 0.1}, {"point": 1, "mass": 0.9}]}',
            parse_float=Decimal,
        )
        mu = MeasureSchema.model_validate(data).to_model()
        assert mu.masses == (Fraction(1, 10), Fraction(9, 10))

    def test_measure_vector_points(self):
        schema = MeasureSchema.model_validate(
            {"atoms": [{"point": [0, 1], "mass": 1}]}
        )
        assert schema.to_model().dim == 2

    def test_measure_round_trip(self, skewed):
        assert MeasureSchema.from_model(skewed).to_model() == skewed

    def test_rejects_unknown_field(self):
        with pytest.raises(ValidationError):
            QuantileSchema.model_validate({"levels": [1], "values": [0], "extra": 1})

    def test_rejects_non_numeric(self):
        with pytest.raises(ValidationError) as exc_info:
            QuantileSchema.model_validate({"levels": [1], "values": ["abc"]})
        assert exc_info.value.errors()[0]["loc"] == ("values", 0)

    def test_rejects_boolean(self):
        with pytest.raises(ValidationError):
            DistortionSchema.model_validate({"knots": [0, 1], "values": [False, 1]})

    def test_quantile_domain_error(self):
        schema = QuantileSchema.model_validate({"levels": ["0.5", "0.9"], "values": [0, 1]})
        with pytest.raises(InputValidationError, match=r"levels\[1\]"):
            schema.to_model()

    def test_distortion_w0(self):
        schema = DistortionSchema.model_validate({"knots": [0, 1], "values": ["0.1", 1]})
        with pytest.raises(InputValidationError, match=r"values\[0\]"):
            schema.to_model()

    def test_utility_kinds(self, sqrt_like_u):
        assert UtilitySchema.from_model(sqrt_like_u).to_model() == sqrt_like_u
        table = UtilitySchema.model_validate(
            {"kind": "table", "knots": [[0, 0], [1, 1]], "values": [0, 1]}
        ).to_model()
        assert table([1, 1]) == 1

    def test_dataset(self):
        data = PreferenceDatasetSchema.model_validate(
            {
                "mode": "dual",
                "prospects": [{"levels": [1], "values": [1]}, {"levels": [1], "values": [0]}],
                "comparisons": [[0, "succ", 1]],
            }
        ).to_model()
        assert data.mode is ElicitationMode.DUAL
        assert data.prospects[0] == StepQuantile.constant(1)

    def test_dataset_mode_mismatch(self):
        schema = PreferenceDatasetSchema.model_validate(
            {"mode": "eu", "prospects": [{"levels": [1], "values": [1]}], "comparisons": []}
        )
        with pytest.raises(MalformedDatasetError, match=r"prospects\[0\]"):
            schema.to_model()


@pytest.mark.unit
class TestLoader:
    """Test file loading diagnostics."""

    def test_missing_file(self, tmp_path):
        path = str(tmp_path / "missing.json")
        with pytest.raises(InputValidationError, match="cannot read"):
            read_json(path)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(InputValidationError, match="invalid JSON"):
            read_json(str(path))

    def test_nan_rejected(self, tmp_path):
        path = tmp_path / "nan.json"
        path.write_text('{"levels": [1], "values": [NaN]}', encoding="utf-8")
        with pytest.raises(InputValidationError):
            read_json(str(path))

    def test_schema_error_names_file_and_field(self, write_json):
        path = write_json("phi.json", {"levels": [1]})
        with pytest.raises(InputValidationError) as exc_info:
            load(path, QuantileSchema)
        assert path in exc_info.value.message
        assert exc_info.value.details["field"] == "values"

    def test_domain_error_names_file(self, write_json):
        path = write_json("w.json", {"knots": [0, "0.5", 1], "values": [0, "0.7", "0.6"]})
        with pytest.raises(InputValidationError, match=r"values\[2\]") as exc_info:
            load(path, DistortionSchema)
        assert exc_info.value.details["file"] == path
