"""JSON wire formats: round trips and schema diagnostics."""

import numpy as np
import pytest

from conftest import random_complex, stream
from dilatekit import Block2x2, GeneratorSpec, contraction, gen_contraction, julia, power_dilation, verify_julia
from dilatekit.jsonio import (
    SchemaError,
    block2x2_from_json,
    block2x2_to_json,
    matrix_from_json,
    matrix_to_json,
    power_dilation_from_json,
    power_dilation_to_json,
    read_json,
    report_from_json,
    report_to_json,
    write_json,
)


def test_matrix_round_trip_bit_exact():
    m = random_complex(stream(61), 3, 5)
    obj = matrix_to_json(m)
    assert obj["rows"] == 3 and obj["cols"] == 5
    assert len(obj["entries"]) == 15
    assert obj["entries"][1] == [float(m[0, 1].real), float(m[0, 1].imag)]
    back = matrix_from_json(obj)
    assert back.tobytes() == m.tobytes()


def test_matrix_round_trip_through_file(tmp_path):
    m = random_complex(stream(62), 4, 2)
    path = tmp_path / "m.json"
    write_json(path, matrix_to_json(m))
    assert np.array_equal(matrix_from_json(read_json(path)), m)


@pytest.mark.parametrize(
    "mutate, field",
    [
        (lambda o: o.pop("rows"), "rows"),
        (lambda o: o.update(rows=0), "rows"),
        (lambda o: o.update(rows="2"), "rows"),
        (lambda o: o.update(cols=True), "cols"),
        (lambda o: o.update(entries="nope"), "entries"),
        (lambda o: o["entries"].pop(), "entries"),
        (lambda o: o["entries"].__setitem__(2, [1.0]), "entries[2]"),
        (lambda o: o["entries"].__setitem__(0, [1.0, float("nan")]), "entries[0]"),
        (lambda o: o["entries"].__setitem__(3, [True, 0.0]), "entries[3]"),
    ],
)
def test_matrix_schema_errors_name_offending_field(mutate, field):
    obj = matrix_to_json(random_complex(stream(63), 2, 2))
    mutate(obj)
    with pytest.raises(SchemaError) as err:
        matrix_from_json(obj)
    assert err.value.field == field


def test_block_round_trip():
    a = gen_contraction(GeneratorSpec(3, 2, "generic", 64))
    block = julia(a)
    obj = block2x2_to_json(block)
    assert obj["splits"] == {"row": 3, "col": 3}
    back = block2x2_from_json(obj)
    assert isinstance(back, Block2x2)
    assert np.array_equal(back.to_matrix(), block.to_matrix())
    for name in ("tl", "tr", "bl", "br"):
        assert np.array_equal(getattr(back, name), getattr(block, name))


def test_block_schema_errors():
    obj = block2x2_to_json(julia(contraction([[0.5]])))
    bad = dict(obj)
    bad.pop("splits")
    with pytest.raises(SchemaError):
        block2x2_from_json(bad)
    bad = {"splits": {"row": 2, "col": 1}, "matrix": obj["matrix"]}
    with pytest.raises(SchemaError) as err:
        block2x2_from_json(bad)
    assert err.value.field == "splits.row"


def test_power_dilation_round_trip():
    a = gen_contraction(GeneratorSpec(2, 2, "strict", 65))
    d = power_dilation(a, 3)
    back = power_dilation_from_json(power_dilation_to_json(d))
    assert back.n_steps == 3 and back.dim_h == 2
    assert np.array_equal(back.u, d.u)


def test_power_dilation_shape_mismatch():
    a = gen_contraction(GeneratorSpec(2, 2, "strict", 66))
    obj = power_dilation_to_json(power_dilation(a, 3))
    obj["n_steps"] = 4
    with pytest.raises(SchemaError) as err:
        power_dilation_from_json(obj)
    assert err.value.field == "matrix"


def test_report_serialization():
    report = verify_julia(contraction([[0.5]]))
    obj = report_to_json(report)
    assert set(obj) == {"checks"}
    assert all(set(c) == {"name", "residual", "tolerance", "pass"} for c in obj["checks"])
    assert all(c["pass"] for c in obj["checks"])
    back = report_from_json(obj)
    assert back.passed
    assert [c.name for c in back.checks] == [c.name for c in report.checks]
