#!/usr/bin/env python
# Encoding: utf8
# -----------------------------------------------------------------------------
# Project   : TwistCert
# -----------------------------------------------------------------------------
# Author    : TwistCert contributors
# -----------------------------------------------------------------------------
# License   : GNU Lesser General Public License
# -----------------------------------------------------------------------------
# Creation  : 09-Oct-2026
# Last mod  : 17-Oct-2026
# -----------------------------------------------------------------------------

import csv, json, math
from   fractions import Fraction
from   twistcert.eccore import ProjPoint, INFINITY, TwistedCurve, WeierstrassCurve, QuarticCurve, CurveError
from   twistcert.parser import parseRat, ParseError

__doc__ = """\
JSON codecs for the exact values found in certificates, and the
'CertificateFile' container.

Rationals are always written as '"p/q"' strings, points as '{"x":..,"y":..}'
objects (or the '"infinity"' string) and floats, which only appear in
evidence fields, with 12 significant digits.

A certificate file is a JSON-lines file: the first line is '{"header": ...}'
and every following line is '{"record": ...}'.
"""

FLOAT_DIGITS = 12

class SchemaError(Exception): pass

# -----------------------------------------------------------------------------
#
# VALUES
#
# -----------------------------------------------------------------------------

def encodeRat( value ):
	value = Fraction(value)
	return "{0}/{1}".format(value.numerator, value.denominator)

def decodeRat( value ):
	if isinstance(value, int) and not isinstance(value, bool):
		return Fraction(value)
	if not isinstance(value, str):
		raise SchemaError("Expected a rational string, got {0!r}".format(value))
	try:
		return parseRat(value)
	except ParseError as e:
		raise SchemaError("Malformed rational {0!r}: {1}".format(value, e))

def encodeFloat( value ):
	if value is None or not math.isfinite(value):
		return None
	return float("{0:.{1}g}".format(value, FLOAT_DIGITS))

def encodePoint( point ):
	if point.isInfinity():
		return "infinity"
	return {"x": encodeRat(point.x), "y": encodeRat(point.y)}

def decodePoint( value ):
	if value == "infinity":
		return INFINITY
	if not isinstance(value, dict) or set(value.keys()) != set(("x", "y")):
		raise SchemaError("Malformed point: {0!r}".format(value))
	return ProjPoint(decodeRat(value["x"]), decodeRat(value["y"]))

def encodeCurve( curve ):
	"""Encodes a rational 'TwistedCurve', 'WeierstrassCurve' or
	'QuarticCurve'."""
	if isinstance(curve, TwistedCurve):
		res = {"model": "twisted", "f": [encodeRat(_) for _ in curve.cubic()], "d": encodeRat(curve.d)}
		if curve.lam is not None:
			res["lambda"] = encodeRat(curve.lam)
		return res
	elif isinstance(curve, WeierstrassCurve):
		return {"model": "weierstrass", "a": [encodeRat(_) for _ in curve.coefficients()]}
	elif isinstance(curve, QuarticCurve):
		return {"model": "quartic", "c": [encodeRat(_) for _ in curve.coefficients()]}
	raise SchemaError("Cannot encode curve {0!r}".format(curve))

def _field( value, name, kind=None ):
	if not isinstance(value, dict) or name not in value:
		raise SchemaError("Missing field {0!r}".format(name))
	res = value[name]
	if kind is not None and not isinstance(res, kind):
		raise SchemaError("Field {0!r} should be a {1}".format(name, kind.__name__))
	return res

def decodeCurve( value ):
	model = _field(value, "model", str)
	try:
		if model == "twisted":
			f = [decodeRat(_) for _ in _field(value, "f", list)]
			if len(f) != 3: raise SchemaError("A twisted curve has three cubic coefficients")
			lam = decodeRat(value["lambda"]) if "lambda" in value else None
			return TwistedCurve(f[0], f[1], f[2], decodeRat(_field(value, "d")), lam=lam)
		elif model == "weierstrass":
			a = [decodeRat(_) for _ in _field(value, "a", list)]
			if len(a) != 5: raise SchemaError("A Weierstrass curve has five coefficients")
			return WeierstrassCurve(*a)
		elif model == "quartic":
			c = [decodeRat(_) for _ in _field(value, "c", list)]
			if len(c) != 5: raise SchemaError("A quartic has five coefficients")
			return QuarticCurve(*c)
	except CurveError as e:
		raise SchemaError("Invalid curve: {0}".format(e))
	raise SchemaError("Unknown curve model {0!r}".format(model))

# -----------------------------------------------------------------------------
#
# CERTIFICATE FILE
#
# -----------------------------------------------------------------------------

class CertificateFile:
	"""A header (tool version, configuration snapshot, family and alpha) and
	the list of record dictionaries. Records are kept as plain JSON values so
	that reading a file never depends on the code that produced it."""

	SUMMARY_FIELDS = ("index", "n", "m", "t", "u", "d_squarefree", "reduction_complete", "orders", "independence_1", "independence_2")

	def __init__( self, header=None, records=None ):
		self.header  = header  or {}
		self.records = records or []

	def append( self, record ):
		self.records.append(record)
		return self

	def dumps( self ):
		lines = [json.dumps({"header": self.header}, sort_keys=True)]
		for record in self.records:
			lines.append(json.dumps({"record": record}, sort_keys=True))
		return "\n".join(lines) + "\n"

	def write( self, path ):
		with open(path, "w") as f:
			f.write(self.dumps())
		return path

	def writeSummary( self, path ):
		"""Writes a CSV table with one line per record."""
		with open(path, "w", newline="") as f:
			writer = csv.DictWriter(f, fieldnames=self.SUMMARY_FIELDS)
			writer.writeheader()
			for i, record in enumerate(self.records):
				walk = record.get("walk") or {}
				writer.writerow({
					"index"              : i,
					"n"                  : walk.get("n"),
					"m"                  : walk.get("m"),
					"t"                  : record.get("t"),
					"u"                  : record.get("u"),
					"d_squarefree"       : record.get("d_squarefree"),
					"reduction_complete" : record.get("reduction_complete"),
					"orders"             : " ".join(_.get("verdict", "?") for _ in record.get("orders", [])),
					"independence_1"     : (record.get("independence") or [{}, {}])[0].get("verdict"),
					"independence_2"     : (record.get("independence") or [{}, {}])[-1].get("verdict"),
				})
		return path

	@classmethod
	def Loads( cls, text ):
		lines = [_ for _ in text.splitlines() if _.strip()]
		if not lines:
			raise SchemaError("Empty certificate file")
		try:
			first = json.loads(lines[0])
		except ValueError as e:
			raise SchemaError("Line 1 is not valid JSON: {0}".format(e))
		header  = _field(first, "header", dict)
		records = []
		for i, line in enumerate(lines[1:]):
			try:
				value = json.loads(line)
			except ValueError as e:
				raise SchemaError("Line {0} is not valid JSON: {1}".format(i + 2, e))
			records.append(_field(value, "record", dict))
		return cls(header, records)

	@classmethod
	def Read( cls, path ):
		with open(path) as f:
			return cls.Loads(f.read())

# EOF - vim: tw=80 ts=4 sw=4 noet
