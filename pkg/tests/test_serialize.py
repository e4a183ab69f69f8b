# Encoding: utf8
import csv
from   fractions import Fraction as F
import pytest
from   twistcert import serialize
from   twistcert.serialize import SchemaError, CertificateFile
from   twistcert.eccore import ProjPoint, TwistedCurve, QuarticCurve

def test_rationals():
	assert serialize.encodeRat(3) == "3/1"
	assert serialize.encodeRat(F(-25, 9)) == "-25/9"
	assert serialize.decodeRat("-25/9") == F(-25, 9)
	assert serialize.decodeRat(7) == 7
	for value in ("t/2", "1/0", 1.5, None, True):
		with pytest.raises(SchemaError):
			serialize.decodeRat(value)

def test_floats():
	assert serialize.encodeFloat(None) is None
	assert serialize.encodeFloat(float("nan")) is None
	assert serialize.encodeFloat(1 / 3) == 0.333333333333

def test_points():
	assert serialize.encodePoint(ProjPoint()) == "infinity"
	assert serialize.decodePoint("infinity").isInfinity()
	point = ProjPoint(F(5, 2), F(-4))
	assert serialize.encodePoint(point) == {"x": "5/2", "y": "-4/1"}
	assert serialize.decodePoint({"x": "5/2", "y": "-4/1"}) == point
	for value in ({"x": "1/1"}, "origin", [1, 2]):
		with pytest.raises(SchemaError):
			serialize.decodePoint(value)

def test_curves():
	curve = TwistedCurve.Legendre(F(-25, 9), -6)
	value = serialize.encodeCurve(curve)
	assert value["lambda"] == "-25/9"
	assert serialize.decodeCurve(value) == curve
	quartic = serialize.decodeCurve({"model": "quartic", "c": ["4", "0", "-25", "0", "16"]})
	assert quartic.coefficients() == QuarticCurve(4, 0, -25, 0, 16).coefficients()
	for value in ({"model": "twisted", "f": ["0", "0", "0"], "d": "1"}, {"model": "conic"}, {"f": []}):
		with pytest.raises(SchemaError):
			serialize.decodeCurve(value)

def test_certificate_file( tmp_path ):
	output = CertificateFile({"tool": "twistcert", "alpha": "2/1"})
	output.append({"t": "5/2", "u": "4/1", "walk": {"n": 1, "m": 0}, "orders": [{"verdict": "InfiniteOrder"}]})
	output.append({"t": "-1/3", "u": "3/1", "walk": None})
	path  = output.write(str(tmp_path / "twists.jsonl"))
	again = CertificateFile.Read(path)
	assert again.header == output.header
	assert again.records == output.records
	summary = output.writeSummary(str(tmp_path / "twists.csv"))
	with open(summary) as f:
		rows = list(csv.DictReader(f))
	assert [_["t"] for _ in rows] == ["5/2", "-1/3"]
	assert rows[0]["orders"] == "InfiniteOrder"

@pytest.mark.parametrize("text", ["", "\n\n", "not json", '{"record": {}}', '{"header": {}}\n[1]'])
def test_malformed_files( text ):
	with pytest.raises(SchemaError):
		CertificateFile.Loads(text)

# EOF - vim: tw=80 ts=4 sw=4 noet
