#!/usr/bin/env python
# Encoding: utf8
# -----------------------------------------------------------------------------
# Project   : TwistCert
# -----------------------------------------------------------------------------
# Author    : TwistCert contributors
# -----------------------------------------------------------------------------
# License   : GNU Lesser General Public License
# -----------------------------------------------------------------------------
# Creation  : 06-Oct-2026
# Last mod  : 17-Oct-2026
# -----------------------------------------------------------------------------

import logging, math
from   fractions import Fraction
from   multiprocessing import Pool
import numpy
from   sympy import divisors, isprime, nextprime
from   sympy.functions.combinatorial.numbers import legendre_symbol
from   twistcert.eccore import INFINITY, WeierstrassCurve
from   twistcert.symalg import QuadExtElem, isConstant
from   twistcert import serialize

__doc__ = """\
Certificates for the points found on the twists:

- 'mazurInfiniteOrder' proves that a rational point has infinite order, by
  checking 'n*P' for every possible order of a rational torsion point
  (1 to 10 and 12, Mazur's theorem), or more quickly with the Nagell-Lutz
  integrality criterion.
- 'modpTorsionBound' bounds the torsion by counting points modulo good
  primes, 'modpInfiniteOrder' turns it into a certificate.
- 'relationScan' excludes small relations 'a*P1 + b*P2 = torsion' exactly and
  'regulatorEvidence' adds the (numerical, unproven) determinant of the
  height pairing.
- 'verifyFunctionFieldIndependence' checks the automorphism argument proving
  independence over the function field.

Certification of distinct points is independent, 'certifyPoints' runs a
list of tasks on a process pool and returns results in input order.
"""

MAZUR_ORDERS         = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)
INFINITE_ORDER       = "InfiniteOrder"
TORSION              = "TorsionOfOrder"
METHOD_MAZUR         = "MazurScan"
METHOD_MODP          = "ModPBound"
METHOD_NAGELL_LUTZ   = "NagellLutz"
INDEPENDENT          = "IndependentEvidence"
RELATION             = "RelationFound"
INCONCLUSIVE         = "Inconclusive"
DEFAULT_PRIME_COUNT  = 3
DEFAULT_PRIME_START  = 7
LOG10_2              = math.log10(2)

class CertifyError(Exception): pass
class Inconclusive(CertifyError): pass

# -----------------------------------------------------------------------------
#
# ORDER CERTIFICATES
#
# -----------------------------------------------------------------------------

class OrderCertificate:

	def __init__( self, point, verdict, order=None, method=METHOD_MAZUR, witnesses=() ):
		self.point     = point
		self.verdict   = verdict
		self.order     = order
		self.method    = method
		self.witnesses = list(witnesses)

	def isInfinite( self ):
		return self.verdict == INFINITE_ORDER

	def label( self ):
		if self.isInfinite():
			return INFINITE_ORDER
		return "{0}({1})".format(TORSION, self.order)

	def sameVerdict( self, other ):
		return self.verdict == other.verdict and self.order == other.order

	def asDict( self ):
		return {
			"point"     : serialize.encodePoint(self.point),
			"verdict"   : self.verdict,
			"order"     : self.order,
			"method"    : self.method,
			"witnesses" : list(self.witnesses),
		}

	@classmethod
	def FromDict( cls, value ):
		try:
			return cls(
				serialize.decodePoint(value["point"]), value["verdict"], value.get("order"),
				value["method"], value.get("witnesses", ())
			)
		except (KeyError, TypeError) as e:
			raise serialize.SchemaError("Malformed order certificate: {0}".format(e))

	def __repr__( self ):
		return "<OrderCertificate {0} by {1}>".format(self.label(), self.method)

def nagellLutzInfiniteOrder( curve, point ):
	"""Returns an 'InfiniteOrder' certificate when the image of the point on
	the integral short model has a non-integral coordinate, None otherwise."""
	if point.isInfinity():
		return None
	image = curve.integralShortModel().forward(point)
	if image.x.denominator != 1 or image.y.denominator != 1:
		return OrderCertificate(point, INFINITE_ORDER, method=METHOD_NAGELL_LUTZ)
	return None

def mazurInfiniteOrder( curve, point, exhaustive=True ):
	"""Certifies the order of a rational point by computing its multiples up
	to 12. With 'exhaustive=False' the Nagell-Lutz test is tried first."""
	curve.check(point)
	if point.isInfinity():
		return OrderCertificate(point, TORSION, 1, METHOD_MAZUR, [1])
	if not exhaustive:
		res = nagellLutzInfiniteOrder(curve, point)
		if res: return res
	witnesses = []
	multiple  = point
	for n in range(1, MAZUR_ORDERS[-1] + 1):
		if multiple.isInfinity():
			return OrderCertificate(point, TORSION, n, METHOD_MAZUR, witnesses + [n])
		if n in MAZUR_ORDERS:
			witnesses.append(n)
		multiple = curve._add(multiple, point)
	return OrderCertificate(point, INFINITE_ORDER, None, METHOD_MAZUR, witnesses)

# -----------------------------------------------------------------------------
#
# MOD P
#
# -----------------------------------------------------------------------------

def pointCount( curve, p ):
	"""Returns '#E(F_p)' for an integral Weierstrass curve and an odd prime,
	completing the square: '(2y + a1x + a3)^2 = 4f(x) + (a1x + a3)^2'."""
	a1, a2, a3, a4, a6 = [int(_) % p for _ in curve.coefficients()]
	count = 1
	for x in range(p):
		f     = (((x + a2) * x + a4) * x + a6) % p
		h     = (a1 * x + a3) % p
		count += 1 + int(legendre_symbol((4 * f + h * h) % p, p))
	return count

def goodPrimes( curve, count=DEFAULT_PRIME_COUNT, start=DEFAULT_PRIME_START ):
	"""Returns the first 'count' primes at least 'start' of good reduction."""
	disc  = int(curve.discriminant())
	res   = []
	p     = nextprime(start - 1)
	while len(res) < count:
		if disc % p:
			res.append(p)
		p = nextprime(p)
	return res

def modpCounts( curve, primes ):
	"""Returns '{p: #E(F_p)}' for the valid primes in the list."""
	if not (isinstance(curve, WeierstrassCurve) and curve.isIntegral()):
		raise CertifyError("Point counting needs an integral Weierstrass model")
	disc = int(curve.discriminant())
	res  = {}
	for p in primes:
		if p <= 2 or not isprime(p):
			logging.warning("Rejecting {0}: not an odd prime".format(p))
		elif disc % p == 0:
			logging.warning("Rejecting {0}: bad reduction".format(p))
		else:
			res[p] = pointCount(curve, p)
	return res

def modpTorsionBound( curve, primes ):
	"""Returns the gcd of '#E(F_p)' over the valid primes, which the order of
	the rational torsion subgroup divides."""
	counts = modpCounts(curve, primes)
	if not counts:
		raise CertifyError("No valid prime in {0}".format(list(primes)))
	return math.gcd(*counts.values())

def modpInfiniteOrder( curve, point, primes=None ):
	"""Certifies the order of a rational point with 'N*P', 'N' being the mod p
	torsion bound of an integral model of the curve."""
	curve.check(point)
	integral = curve.integralShortModel().target
	primes   = primes or goodPrimes(integral)
	bound    = modpTorsionBound(integral, primes)
	if not curve.mul(bound, point).isInfinity():
		return OrderCertificate(point, INFINITE_ORDER, None, METHOD_MODP, primes)
	for n in divisors(bound):
		if curve.mul(n, point).isInfinity():
			return OrderCertificate(point, TORSION, n, METHOD_MODP, primes)

# -----------------------------------------------------------------------------
#
# INDEPENDENCE
#
# -----------------------------------------------------------------------------

class IndependenceReport:

	def __init__( self, points, bound, relations=None, regulator=None, tolerance=None, heights=None, verdict=INCONCLUSIVE, reason=None, doublings=None ):
		self.points    = points
		self.bound     = bound
		self.relations = relations or []
		self.regulator = regulator
		self.tolerance = tolerance
		self.heights   = heights or {}
		self.verdict   = verdict
		self.reason    = reason
		self.doublings = doublings

	def isIndependent( self ):
		return self.verdict == INDEPENDENT

	def relation( self ):
		"""The first '(a, b)' found with 'a*P1 + b*P2' torsion, if any."""
		return tuple(self.relations[0][:2]) if self.relations else None

	def label( self ):
		if self.verdict == RELATION:
			return "{0}({1},{2})".format(RELATION, *self.relation())
		return self.verdict

	def asDict( self ):
		return {
			"points"     : [serialize.encodePoint(_) for _ in self.points],
			"bound"      : self.bound,
			"relations"  : [list(_) for _ in self.relations],
			"regulator"  : serialize.encodeFloat(self.regulator),
			"tolerance"  : self.tolerance,
			"doublings"  : self.doublings,
			"heights"    : dict((k, serialize.encodeFloat(v)) for k, v in self.heights.items()),
			"verdict"    : self.verdict,
			"reason"     : self.reason,
		}

	@classmethod
	def FromDict( cls, value ):
		try:
			return cls(
				[serialize.decodePoint(_) for _ in value["points"]], value["bound"],
				[tuple(_) for _ in value.get("relations", [])], value.get("regulator"),
				value.get("tolerance"), value.get("heights"), value["verdict"],
				value.get("reason"), value.get("doublings")
			)
		except (KeyError, TypeError) as e:
			raise serialize.SchemaError("Malformed independence report: {0}".format(e))

	def __repr__( self ):
		return "<IndependenceReport {0} B={1} det={2}>".format(self.label(), self.bound, self.regulator)

def relationScan( curve, p1, p2, bound ):
	"""Looks for torsion combinations 'a*p1 + b*p2' with
	'0 < max(|a|, |b|) <= bound', one of each '(a, b)', '(-a, -b)' pair."""
	curve.check(p1)
	curve.check(p2)
	multiples1 = [INFINITY]
	for a in range(bound):
		multiples1.append(curve._add(multiples1[-1], p1))
	positive, negative = [INFINITY], [INFINITY]
	for b in range(bound):
		positive.append(curve._add(positive[-1], p2))
		negative.append(curve.neg(positive[-1]))
	relations = []
	for a in range(0, bound + 1):
		for b in range(-bound, bound + 1):
			if a == 0 and b <= 0:
				continue
			combined = curve._add(multiples1[a], positive[b] if b >= 0 else negative[-b])
			cert     = mazurInfiniteOrder(curve, combined, exhaustive=False)
			if not cert.isInfinite():
				assert curve.mul(cert.order, combined).isInfinity()
				relations.append((a, b, cert.order))
	verdict = RELATION if relations else INCONCLUSIVE
	return IndependenceReport((p1, p2), bound, relations, verdict=verdict)

def naiveHeight( x ):
	"""Returns 'log max(|p|, |q|)' for 'x = p/q'."""
	x = Fraction(x)
	return math.log(max(abs(x.numerator), x.denominator, 1))

def _digits( point ):
	bits = max(point.x.numerator.bit_length(), point.x.denominator.bit_length(), point.y.numerator.bit_length(), point.y.denominator.bit_length())
	return int(bits * LOG10_2) + 1

def canonicalHeightEstimate( curve, point, doublings=4, digitBudget=10 ** 5 ):
	"""Returns 'h(2^n P)/4^n', 'h' being the naive height of the x-coordinate.
	Raises 'Inconclusive' when the coordinates exceed 'digitBudget' digits."""
	if doublings < 1:
		raise CertifyError("At least one doubling is needed")
	curve.check(point)
	multiple = point
	for i in range(doublings):
		if multiple.isInfinity():
			return 0.0
		multiple = curve._add(multiple, multiple)
		if not multiple.isInfinity() and _digits(multiple) > digitBudget:
			raise Inconclusive("Coordinates of 2^{0}P exceed {1} digits".format(i + 1, digitBudget))
	if multiple.isInfinity():
		return 0.0
	return naiveHeight(multiple.x) / 4 ** doublings

def regulatorEvidence( curve, p1, p2, bound=3, doublings=4, tolerance=1e-3, digitBudget=10 ** 5 ):
	"""Returns the independence report of the two points: an exact relation
	scan followed by the determinant of the estimated height pairing."""
	report           = relationScan(curve, p1, p2, bound)
	report.tolerance = tolerance
	report.doublings = doublings
	if report.relations:
		return report
	try:
		h1  = canonicalHeightEstimate(curve, p1, doublings, digitBudget)
		h2  = canonicalHeightEstimate(curve, p2, doublings, digitBudget)
		h12 = canonicalHeightEstimate(curve, curve._add(p1, p2), doublings, digitBudget)
	except Inconclusive as e:
		report.verdict = INCONCLUSIVE
		report.reason  = str(e)
		return report
	pairing          = (h12 - h1 - h2) / 2
	gram             = numpy.array([[h1, pairing], [pairing, h2]])
	report.regulator = float(numpy.linalg.det(gram))
	report.heights   = {"h1": h1, "h2": h2, "h12": h12, "pairing": pairing}
	if report.regulator > tolerance:
		report.verdict = INDEPENDENT
	else:
		report.verdict = INCONCLUSIVE
		report.reason  = "regulator {0:.6g} below tolerance {1}".format(report.regulator, tolerance)
	return report

# -----------------------------------------------------------------------------
#
# FUNCTION FIELD
#
# -----------------------------------------------------------------------------

def _components( point, modulus ):
	return [_ if isinstance(_, QuadExtElem) else QuadExtElem(_, 0, modulus) for _ in point.asTuple()]

def verifyFunctionFieldIndependence( curve, p1, p2 ):
	"""Tells if the automorphism 'u |-> -u' fixes one of the points and sends
	the other one to its inverse, both having a non-constant x-coordinate.
	Raises 'NotOnCurve' when a point does not satisfy the symbolic curve
	equation."""
	curve.check(p1)
	curve.check(p2)
	if p1.isInfinity() or p2.isInfinity():
		return False
	moduli = [_.modulus for _ in p1.asTuple() + p2.asTuple() if isinstance(_, QuadExtElem)]
	if not moduli:
		return False
	(x1, y1), (x2, y2) = _components(p1, moduli[0]), _components(p2, moduli[0])
	def fixed( x, y ):
		return x.isScalar() and y.isScalar()
	def negated( x, y ):
		return x.isScalar() and not y.a and not y.isScalar()
	if isConstant(x1.a) or isConstant(x2.a):
		return False
	return (fixed(x1, y1) and negated(x2, y2)) or (negated(x1, y1) and fixed(x2, y2))

# -----------------------------------------------------------------------------
#
# WORK POOL
#
# -----------------------------------------------------------------------------

def runTask( task ):
	"""Runs a '(kind, args)' certification task, 'kind' being 'order',
	'modp' or 'independence'."""
	kind, args = task
	if kind == "order":
		return mazurInfiniteOrder(*args)
	elif kind == "modp":
		return modpInfiniteOrder(*args)
	elif kind == "independence":
		return regulatorEvidence(*args)
	raise CertifyError("Unknown task kind: {0}".format(kind))

def certifyPoints( tasks, workers=1 ):
	"""Runs the given tasks, returning their results in input order."""
	tasks = list(tasks)
	if workers <= 1 or len(tasks) <= 1:
		return [runTask(_) for _ in tasks]
	with Pool(min(workers, len(tasks))) as pool:
		return pool.map(runTask, tasks)

# EOF - vim: tw=80 ts=4 sw=4 noet
