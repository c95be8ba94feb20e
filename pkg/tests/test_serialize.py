"""Round-trip and rejection tests for the JSON file formats."""

from fractions import Fraction

import pytest

from tverlab import serialize
from tverlab.errors import ParseError
from tverlab.model import (
    ColoredConfig,
    PartitionTuple,
    ProblemInstance,
    default_profile,
    random_instance,
    tightness_instance,
)
from tverlab.solver import (
    KPlane,
    SearchBudget,
    TverbergCertificate,
    solve_hyperplane_transversal_exact,
    solve_tverberg,
    sweep,
)


# ---------------------------------------------------------------------------
# rational scalars


@pytest.mark.parametrize(
    "value,expected",
    [
        (7, Fraction(7)),
        (-3, Fraction(-3)),
        ("5", Fraction(5)),
        ("-5", Fraction(-5)),
        ("2/3", Fraction(2, 3)),
        ("-10/4", Fraction(-5, 2)),
        (" 1/2 ", Fraction(1, 2)),
    ],
)
def test_parse_rational_accepts(value, expected):
    assert serialize.parse_rational(value) == expected


@pytest.mark.parametrize(
    "value",
    ["1/0", "0/0", "1.5", "", "1/2/3", "a/b", "1 / 2", 2.5, True, None, [1]],
)
def test_parse_rational_rejects(value):
    with pytest.raises(ParseError):
        serialize.parse_rational(value)


def test_fraction_canonical_form():
    assert serialize.fraction_to_json(Fraction(4, 2)) == 2
    assert serialize.fraction_to_json(Fraction(-6, 4)) == "-3/2"
    assert serialize.parse_rational(serialize.fraction_to_json(Fraction(22, 7))) == (
        Fraction(22, 7)
    )


# ---------------------------------------------------------------------------
# instances


@pytest.mark.parametrize("seed", range(4))
def test_instance_round_trip(seed):
    inst = random_instance(2, 1, (2, 2), seed=seed, jitter_q=7)
    data = serialize.instance_to_json(inst)
    assert serialize.instance_from_json(data) == inst


def test_instance_round_trip_tightness():
    inst = tightness_instance(2, 1, (2, 2), 0)
    assert serialize.instance_from_json(serialize.instance_to_json(inst)) == inst


def test_instance_bytes_canonical_and_stable(tmp_path):
    inst = random_instance(2, 0, (3,), seed=1)
    path = tmp_path / "inst.json"
    serialize.save_instance(str(path), inst)
    first = path.read_bytes()
    serialize.save_instance(str(path), serialize.load_instance(str(path)))
    assert path.read_bytes() == first


def test_instance_file_round_trip(tmp_path):
    inst = random_instance(3, 1, (2, 2), seed=5)
    path = tmp_path / "inst.json"
    serialize.save_instance(str(path), inst)
    assert serialize.load_instance(str(path)) == inst


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("format"),
        lambda d: d.update(format="something-else"),
        lambda d: d.update(version=99),
        lambda d: d.update(d="two"),
        lambda d: d.update(collections=[]),
        lambda d: d["collections"][0].update(r=True),
        lambda d: d["collections"][0]["points"][0].append("1/0"),
        lambda d: d["collections"][0]["points"].pop(),
        lambda d: d["collections"][0]["classes"][0].append(99),
        lambda d: d["collections"][0]["classes"][0].clear(),
        lambda d: d["collections"][0].update(classes=[[0]]),
    ],
)
def test_instance_malformed_rejected(mutate):
    inst = random_instance(2, 0, (3,), seed=0)
    data = serialize.instance_to_json(inst)
    mutate(data)
    with pytest.raises(ParseError):
        serialize.instance_from_json(data)


def test_instance_structural_violation_is_parse_error():
    inst = random_instance(2, 1, (2, 2), seed=0)
    data = serialize.instance_to_json(inst)
    data["k"] = 0  # now the collection count disagrees with k
    with pytest.raises(ParseError):
        serialize.instance_from_json(data)


def test_read_json_errors(tmp_path):
    missing = tmp_path / "nope.json"
    with pytest.raises(ParseError):
        serialize.read_json(str(missing))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        serialize.read_json(str(bad))


# ---------------------------------------------------------------------------
# certificates


def _tverberg_cert():
    inst = random_instance(2, 0, (3,), seed=2)
    report = solve_tverberg(inst.collections[0], 3)
    assert report.certified
    return inst, report.certificate


def _transversal_cert():
    inst = random_instance(2, 1, (2, 2), [(1, 1, 1), (1, 1, 1)], seed=2)
    report = solve_hyperplane_transversal_exact(inst)
    assert report.certified
    return inst, report.certificate


def test_tverberg_certificate_round_trip():
    _, cert = _tverberg_cert()
    data = serialize.certificate_to_json(cert)
    assert data["kind"] == "tverberg"
    assert serialize.certificate_from_json(data) == cert


def test_transversal_certificate_round_trip(tmp_path):
    _, cert = _transversal_cert()
    path = tmp_path / "cert.json"
    serialize.save_certificate(str(path), cert)
    assert serialize.load_certificate(str(path)) == cert


def test_certificate_bytes_stable(tmp_path):
    _, cert = _transversal_cert()
    path = tmp_path / "cert.json"
    serialize.save_certificate(str(path), cert)
    first = path.read_bytes()
    serialize.save_certificate(str(path), serialize.load_certificate(str(path)))
    assert path.read_bytes() == first


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(kind="unknown"),
        lambda d: d.pop("kind"),
        lambda d: d.update(point=[]),
        lambda d: d.update(partition="nope"),
        lambda d: d["weights"][0].append(0.5),
    ],
)
def test_tverberg_certificate_malformed_rejected(mutate):
    _, cert = _tverberg_cert()
    data = serialize.certificate_to_json(cert)
    mutate(data)
    with pytest.raises(ParseError):
        serialize.certificate_from_json(data)


def test_transversal_certificate_dependent_plane_rejected():
    _, cert = _transversal_cert()
    data = serialize.certificate_to_json(cert)
    first = data["plane"]["directions"][0]
    data["plane"]["directions"] = [first, list(first)]
    with pytest.raises(ParseError):
        serialize.certificate_from_json(data)


def test_certificate_unknown_object_rejected():
    with pytest.raises(TypeError):
        serialize.certificate_to_json({"kind": "tverberg"})


def test_hand_built_certificate_serializes():
    cert = TverbergCertificate(
        point=(Fraction(1, 2),),
        partition=PartitionTuple(pieces=((0, 1), (2,))),
        weights=((Fraction(1, 2), Fraction(1, 2)), (Fraction(1),)),
    )
    assert serialize.certificate_from_json(serialize.certificate_to_json(cert)) == cert


# ---------------------------------------------------------------------------
# sweep reports and atomic writes


def test_sweep_report_emits(tmp_path):
    report = sweep(2, 0, (3,), [default_profile(2, 0, 3)], trials=2, seed=11)
    data = serialize.sweep_report_to_json(report, {"trials": 2, "seed": 11})
    assert data["format"] == serialize.SWEEP_FORMAT
    assert data["certified"] == report.certified
    assert [o["seed"] for o in data["outcomes"]] == [11, 12]
    path = tmp_path / "report.json"
    serialize.write_json(str(path), data)
    assert serialize.read_json(str(path)) == data


def test_atomic_write_leaves_no_temp_files(tmp_path):
    path = tmp_path / "out.json"
    serialize.write_json(str(path), {"a": 1})
    serialize.write_json(str(path), {"a": 2})
    assert [p.name for p in tmp_path.iterdir()] == ["out.json"]
    assert serialize.read_json(str(path)) == {"a": 2}


def test_canonical_bytes_sorted_and_compact():
    payload = serialize.canonical_bytes({"b": 1, "a": [1, 2]})
    assert payload == b'{"a":[1,2],"b":1}\n'
