#!/usr/bin/env python
# Encoding: utf8
# -----------------------------------------------------------------------------
# Project   : TwistCert
# -----------------------------------------------------------------------------
# Author    : TwistCert contributors
# -----------------------------------------------------------------------------
# License   : GNU Lesser General Public License
# -----------------------------------------------------------------------------
# Creation  : 04-Oct-2026
# Last mod  : 17-Oct-2026
# -----------------------------------------------------------------------------

from   fractions import Fraction
from   math import lcm
from   sympy.polys.fields import FracElement
from   sympy.polys.rings  import PolyElement
from   twistcert import symalg, factor
from   twistcert.symalg import QuadExtElem

__doc__ = """\
Elliptic curve models and their exact group law. Three models are supported:

- 'WeierstrassCurve', the long form 'y^2 + a1xy + a3y = x^3 + a2x^2 + a4x + a6'
- 'TwistedCurve', the twist 'd*y^2 = x^3 + a2x^2 + a4x + a6' (and its
   'LegendreCurve' special case 'y^2 = x(x-1)(x-lambda)')
- 'QuarticCurve', the genus one quartic 'v^2 = c4t^4 + ... + c0'

Coefficients are 'Fraction' values, or RatFuncs for symbolic curves, in which
case points may also carry 'QuadExtElem' coordinates. The group law only
uses field operations, so the same code serves both cases.

Conversions between models are 'CurveMap' instances, carrying both directions
of the (bi)rational map.
"""

class CurveError(Exception): pass
class SingularCurve(CurveError): pass
class NotOnCurve(CurveError): pass
class ExceptionalPoint(CurveError): pass

def _isSymbolic( value ):
	return isinstance(value, (FracElement, PolyElement, QuadExtElem))

def _coefficients( *values ):
	"""Normalizes curve coefficients so that they all share one type."""
	if any(_isSymbolic(_) for _ in values):
		return [symalg.lift(_) for _ in values]
	return [Fraction(_) for _ in values]

# -----------------------------------------------------------------------------
#
# POINTS
#
# -----------------------------------------------------------------------------

class ProjPoint:
	"""A point of a plane model, either affine '(x, y)' or the point at
	infinity (the group identity) when both coordinates are None."""

	def __init__( self, x=None, y=None ):
		if (x is None) != (y is None):
			raise CurveError("A point needs both coordinates or none")
		self.x = x
		self.y = y

	def isInfinity( self ):
		return self.x is None

	def asTuple( self ):
		return None if self.isInfinity() else (self.x, self.y)

	def __eq__( self, other ):
		if not isinstance(other, ProjPoint):
			return NotImplemented
		if self.isInfinity() or other.isInfinity():
			return self.isInfinity() and other.isInfinity()
		return not (self.x - other.x) and not (self.y - other.y)

	def __ne__( self, other ):
		res = self.__eq__(other)
		return res if res is NotImplemented else not res

	def __hash__( self ):
		return hash(self.asTuple())

	def __repr__( self ):
		if self.isInfinity():
			return "<ProjPoint:Infinity>"
		return "<ProjPoint ({0}, {1})>".format(symalg.render(self.x), symalg.render(self.y))

INFINITY = ProjPoint()

class CurveMap:
	"""A rational map between two models, with its inverse."""

	def __init__( self, source, target, forward, inverse, name=None ):
		self.source   = source
		self.target   = target
		self._forward = forward
		self._inverse = inverse
		self.name     = name or "map"

	def __call__( self, point ):
		return self.forward(point)

	def forward( self, point ):
		if point.isInfinity():
			return INFINITY
		return self._forward(point)

	def inverse( self, point ):
		if point.isInfinity():
			return INFINITY
		return self._inverse(point)

	def inverted( self ):
		return CurveMap(self.target, self.source, self._inverse, self._forward, "inverse " + self.name)

	def then( self, other ):
		"""Returns the composition 'other o self'."""
		return CurveMap(
			self.source, other.target,
			lambda p: other.forward(self.forward(p)),
			lambda p: self.inverse(other.inverse(p)),
			"{0} o {1}".format(other.name, self.name)
		)

	@classmethod
	def Identity( cls, curve ):
		return cls(curve, curve, lambda p: p, lambda p: p, "identity")

	@classmethod
	def Scaling( cls, source, target, c ):
		"""The map '(x, y) |-> (c^2*x, c^3*y)'."""
		c2, c3 = c * c, c * c * c
		return cls(
			source, target,
			lambda p: ProjPoint(p.x * c2, p.y * c3),
			lambda p: ProjPoint(p.x / c2, p.y / c3),
			"scaling by {0}".format(c)
		)

# -----------------------------------------------------------------------------
#
# CURVE BASE
#
# -----------------------------------------------------------------------------

class Curve:
	"""Group law operations shared by the cubic models. Subclasses implement
	'isOnCurve', 'neg' and '_add'."""

	def check( self, point ):
		if not self.isOnCurve(point):
			raise NotOnCurve("{0} is not on {1}".format(point, self))
		return point

	def add( self, p, q ):
		self.check(p)
		self.check(q)
		return self._add(p, q)

	def sub( self, p, q ):
		return self.add(p, self.neg(q))

	def double( self, p ):
		return self.add(p, p)

	def mul( self, n, p ):
		"""Returns 'n*p' by double-and-add, for any integer 'n'."""
		self.check(p)
		if n < 0:
			return self.mul(-n, self.neg(p))
		res, base = INFINITY, p
		while n:
			if n & 1:
				res = self._add(res, base)
			n >>= 1
			if n:
				base = self._add(base, base)
		return res

	def combine( self, a, p, b, q ):
		"""Returns 'a*p + b*q'."""
		return self._add(self.mul(a, p), self.mul(b, q))

	def jInvariant( self ):
		return self.weierstrass().target.jInvariant()

	def discriminant( self ):
		return self.weierstrass().target.discriminant()

	def integralShortModel( self ):
		"""Returns a 'CurveMap' from this curve to an integral short model
		'y^2 = x^3 + A*x + B'."""
		toW   = self.weierstrass()
		toI   = toW.target.integralModel()
		toS   = toI.target.shortModel()
		return toW.then(toI).then(toS)

# -----------------------------------------------------------------------------
#
# WEIERSTRASS MODEL
#
# -----------------------------------------------------------------------------

class WeierstrassCurve(Curve):

	@classmethod
	def Short( cls, A, B ):
		return cls(0, 0, 0, A, B)

	def __init__( self, a1=0, a2=0, a3=0, a4=0, a6=0 ):
		self.a1, self.a2, self.a3, self.a4, self.a6 = _coefficients(a1, a2, a3, a4, a6)
		a1, a2, a3, a4, a6 = self.coefficients()
		self.b2 = a1 * a1 + 4 * a2
		self.b4 = 2 * a4 + a1 * a3
		self.b6 = a3 * a3 + 4 * a6
		self.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
		self.c4 = self.b2 * self.b2 - 24 * self.b4
		self.c6 = -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6
		if not self.discriminant():
			raise SingularCurve("Singular curve: {0}".format(self))

	def coefficients( self ):
		return (self.a1, self.a2, self.a3, self.a4, self.a6)

	def isShort( self ):
		return not self.a1 and not self.a2 and not self.a3

	def isIntegral( self ):
		return all(isinstance(_, Fraction) and _.denominator == 1 for _ in self.coefficients())

	def discriminant( self ):
		b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
		return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

	def jInvariant( self ):
		return self.c4 ** 3 / self.discriminant()

	def weierstrass( self ):
		return CurveMap.Identity(self)

	def isOnCurve( self, p ):
		if p.isInfinity():
			return True
		x, y = p.x, p.y
		lhs  = y * y + x * y * self.a1 + y * self.a3
		rhs  = ((x + self.a2) * x + self.a4) * x + self.a6
		return not (lhs - rhs)

	def neg( self, p ):
		if p.isInfinity():
			return p
		return ProjPoint(p.x, -p.y - p.x * self.a1 - self.a3)

	def _add( self, p, q ):
		if p.isInfinity(): return q
		if q.isInfinity(): return p
		a1, a2, a3, a4, a6 = self.coefficients()
		x1, y1, x2, y2 = p.x, p.y, q.x, q.y
		if not (x1 - x2):
			if not (y1 + y2 + x2 * a1 + a3):
				return INFINITY
			den = y1 * 2 + x1 * a1 + a3
			lam = (x1 * x1 * 3 + x1 * a2 * 2 + a4 - y1 * a1) / den
			nu  = (-x1 * x1 * x1 + x1 * a4 + a6 * 2 - y1 * a3) / den
		else:
			den = x2 - x1
			lam = (y2 - y1) / den
			nu  = (y1 * x2 - y2 * x1) / den
		x3 = lam * lam + lam * a1 - a2 - x1 - x2
		y3 = -(lam + a1) * x3 - nu - a3
		return ProjPoint(x3, y3)

	def shortModel( self ):
		"""Returns the map to 'Y^2 = X^3 - 27c4*X - 54c6' given by
		'X = 36x + 3b2', 'Y = 108(2y + a1x + a3)', or the identity when the
		curve already is in short form."""
		if self.isShort():
			return CurveMap.Identity(self)
		a1, a3, b2 = self.a1, self.a3, self.b2
		target = WeierstrassCurve.Short(-27 * self.c4, -54 * self.c6)
		def forward( p ):
			return ProjPoint(p.x * 36 + b2 * 3, (p.y * 2 + p.x * a1 + a3) * 108)
		def inverse( p ):
			x = (p.x - b2 * 3) / 36
			return ProjPoint(x, (p.y / 108 - x * a1 - a3) / 2)
		return CurveMap(self, target, forward, inverse, "short model")

	def integralModel( self ):
		"""Returns the scaling '(x, y) |-> (c^2x, c^3y)' to a model with
		integral coefficients, 'c' being the lcm of the denominators."""
		if not all(isinstance(_, Fraction) for _ in self.coefficients()):
			raise CurveError("Integral models need rational coefficients")
		c = 1
		for a in self.coefficients():
			c = lcm(c, a.denominator)
		if c == 1:
			return CurveMap.Identity(self)
		c      = Fraction(c)
		target = WeierstrassCurve(self.a1 * c, self.a2 * c ** 2, self.a3 * c ** 3, self.a4 * c ** 4, self.a6 * c ** 6)
		return CurveMap.Scaling(self, target, c)

	def __eq__( self, other ):
		return isinstance(other, WeierstrassCurve) and all(not (a - b) for a, b in zip(self.coefficients(), other.coefficients()))

	def __hash__( self ):
		return hash(tuple(symalg.render(_) for _ in self.coefficients()))

	def __repr__( self ):
		return "<WeierstrassCurve [{0}]>".format(", ".join(symalg.render(_) for _ in self.coefficients()))

# -----------------------------------------------------------------------------
#
# TWISTED MODEL
#
# -----------------------------------------------------------------------------

def cubicDiscriminant( a2, a4, a6 ):
	"""Discriminant of 'x^3 + a2x^2 + a4x + a6'."""
	return a2 * a2 * a4 * a4 - 4 * a4 ** 3 - 4 * a2 ** 3 * a6 - 27 * a6 * a6 + 18 * a2 * a4 * a6

class TwistedCurve(Curve):
	"""The model 'd*y^2 = f(x)' with 'f(x) = x^3 + a2x^2 + a4x + a6'. The group
	law runs through the isomorphic Weierstrass model
	'Y^2 = X^3 + d*a2X^2 + d^2*a4X + d^3*a6', '(X, Y) = (d*x, d^2*y)'."""

	@classmethod
	def Legendre( cls, lam, d=1 ):
		return cls(-(1 + lam), lam, 0, d, lam=lam)

	def __init__( self, a2, a4, a6, d=1, lam=None ):
		self.a2, self.a4, self.a6, self.d = _coefficients(a2, a4, a6, d)
		self.lam = None if lam is None else _coefficients(lam, self.d)[0]
		if not self.d:
			raise CurveError("Cannot twist by zero")
		if not cubicDiscriminant(self.a2, self.a4, self.a6):
			raise SingularCurve("The cubic of {0} has a repeated root".format(self))
		self._weierstrass = None

	def cubic( self ):
		return (self.a2, self.a4, self.a6)

	def f( self, x ):
		return ((x + self.a2) * x + self.a4) * x + self.a6

	def twist( self, d ):
		d = _coefficients(d, self.d)[0]
		if not d:
			raise CurveError("Cannot twist by zero")
		return TwistedCurve(self.a2, self.a4, self.a6, self.d * d, lam=self.lam)

	def retwist( self, d ):
		"""Returns the map to the twist by 'd', which must be in the square
		class of this curve's 'd': '(x, y) |-> (x, s*y)' with 's^2 = self.d/d'."""
		d     = _coefficients(d, self.d)[0]
		ratio = self.d / d
		if isinstance(ratio, Fraction):
			s = factor.rationalSqrt(ratio)
		else:
			s = symalg.ratfuncSqrt(ratio)
		if s is None:
			raise CurveError("{0} and {1} are not in the same square class".format(symalg.render(self.d), symalg.render(d)))
		target = TwistedCurve(self.a2, self.a4, self.a6, d, lam=self.lam)
		return CurveMap(
			self, target,
			lambda p: ProjPoint(p.x, p.y * s),
			lambda p: ProjPoint(p.x, p.y / s),
			"retwist"
		)

	def weierstrass( self ):
		if self._weierstrass is None:
			d = self.d
			target = WeierstrassCurve(0, self.a2 * d, 0, self.a4 * d * d, self.a6 * d ** 3)
			self._weierstrass = CurveMap(
				self, target,
				lambda p: ProjPoint(p.x * d, p.y * d * d),
				lambda p: ProjPoint(p.x / d, p.y / (d * d)),
				"twist scaling"
			)
		return self._weierstrass

	def isOnCurve( self, p ):
		if p.isInfinity():
			return True
		return not (p.y * p.y * self.d - self.f(p.x))

	def neg( self, p ):
		if p.isInfinity():
			return p
		return ProjPoint(p.x, -p.y)

	def _add( self, p, q ):
		m = self.weierstrass()
		return m.inverse(m.target._add(m.forward(p), m.forward(q)))

	def __getstate__( self ):
		state = dict(self.__dict__)
		state["_weierstrass"] = None
		return state

	def __eq__( self, other ):
		return isinstance(other, TwistedCurve) and all(not (a - b) for a, b in zip(self.cubic() + (self.d,), other.cubic() + (other.d,)))

	def __hash__( self ):
		return hash(tuple(symalg.render(_) for _ in self.cubic() + (self.d,)))

	def __repr__( self ):
		return "<TwistedCurve {0}*y^2 = x^3 + ({1})x^2 + ({2})x + ({3})>".format(*[symalg.render(_) for _ in (self.d,) + self.cubic()])

class LegendreCurve(TwistedCurve):
	"""The Legendre curve 'y^2 = x(x-1)(x-lambda)'."""

	def __init__( self, lam ):
		lam = _coefficients(lam)[0]
		if not lam or not (lam - 1):
			raise CurveError("lambda must avoid {{0, 1}}, got {0}".format(symalg.render(lam)))
		TwistedCurve.__init__(self, -(1 + lam), lam, 0, 1, lam=lam)

	def twist( self, d ):
		return TwistedCurve.Legendre(self.lam, _coefficients(d, self.lam)[0])

	def orbit( self ):
		return legendreOrbit(self.lam)

	def jInvariant( self ):
		lam = self.lam
		return 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)

# -----------------------------------------------------------------------------
#
# QUARTIC MODEL
#
# -----------------------------------------------------------------------------

class QuarticCurve:
	"""The genus one curve 'v^2 = c4t^4 + c3t^3 + c2t^2 + c1t + c0'. Points are
	'ProjPoint(t, v)'."""

	def __init__( self, c4, c3, c2, c1, c0 ):
		self.c4, self.c3, self.c2, self.c1, self.c0 = _coefficients(c4, c3, c2, c1, c0)
		if not self.discriminant():
			raise SingularCurve("The quartic of {0} is not separable".format(self))

	def coefficients( self ):
		return (self.c4, self.c3, self.c2, self.c1, self.c0)

	def value( self, t ):
		return (((t * self.c4 + self.c3) * t + self.c2) * t + self.c1) * t + self.c0

	def isOnCurve( self, p ):
		return not p.isInfinity() and not (p.y * p.y - self.value(p.x))

	def check( self, p ):
		if not self.isOnCurve(p):
			raise NotOnCurve("{0} is not on {1}".format(p, self))
		return p

	def invariants( self ):
		"""Returns the classical invariants '(I, J)' of the quartic."""
		a, b, c, d, e = self.coefficients()
		I = 12 * a * e - 3 * b * d + c * c
		J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c ** 3
		return I, J

	def discriminant( self ):
		I, J = self.invariants()
		return (4 * I ** 3 - J * J) / 27

	def jacobian( self ):
		"""The Weierstrass model 'y^2 = x^3 - 27I*x - 27J' of the Jacobian."""
		I, J = self.invariants()
		return WeierstrassCurve.Short(-27 * I, -27 * J)

	def jInvariant( self ):
		return self.jacobian().jInvariant()

	def translated( self, t0 ):
		"""Returns the quartic 'Q(s + t0)'."""
		coeffs = list(reversed(self.coefficients()))
		shifted = []
		for k in range(5):
			total = 0
			power = 1
			for i in range(k, 5):
				total = total + coeffs[i] * _binomial(i, k) * power
				power = power * t0
			shifted.append(total)
		return QuarticCurve(*reversed(shifted))

	def __repr__( self ):
		return "<QuarticCurve v^2 = [{0}]>".format(", ".join(symalg.render(_) for _ in self.coefficients()))

def _binomial( n, k ):
	res = 1
	for i in range(k):
		res = res * (n - i) // (i + 1)
	return res

def quarticToWeierstrass( quartic, seed ):
	"""Returns a 'CurveMap' from the quartic to a Weierstrass model sending
	the rational 'seed' point to infinity.

	The seed is first translated to 't = 0'. When its 'v' coordinate 'q' is
	non zero, the classical map for 'v^2 = a s^4 + b s^3 + c s^2 + d s + q^2'
	is used:

	>   x = (2q(v+q) + d s)/s^2
	>   y = (4q^2(v+q) + 2q(d s + c s^2) - d^2 s^2/(2q))/s^3

	onto 'y^2 + a1xy + a3y = x^3 + a2x^2 + a4x + a6' with 'a1 = d/q',
	'a2 = c - d^2/(4q^2)', 'a3 = 2qb', 'a4 = -4q^2a', 'a6 = a2a4'. When the
	seed is a root of the quartic, 's = e1/x' reduces it to a cubic."""
	quartic.check(seed)
	t0    = seed.x
	q     = seed.y
	local = quartic.translated(t0)
	e4, e3, e2, e1, e0 = local.coefficients()
	if q:
		a, b, c, d = e4, e3, e2, e1
		a1 = d / q
		a2 = c - d * d / (4 * q * q)
		a3 = 2 * q * b
		a4 = -4 * q * q * a
		curve = WeierstrassCurve(a1, a2, a3, a4, a2 * a4)
		def forward( p ):
			s, v = p.x - t0, p.y
			if not s:
				if not (v - q):
					return INFINITY
				return ProjPoint(-a2, a1 * a2 - a3)
			x = (2 * q * (v + q) + d * s) / (s * s)
			y = (4 * q * q * (v + q) + 2 * q * (d * s + c * s * s) - d * d * s * s / (2 * q)) / (s * s * s)
			return ProjPoint(x, y)
		def inverse( p ):
			x, y = p.x, p.y
			if not y:
				raise ExceptionalPoint("{0} lies on the exceptional locus of the inverse map".format(p))
			s = (2 * q * (x + c) - d * d / (2 * q)) / y
			v = -q + s * (s * x - d) / (2 * q)
			return ProjPoint(s + t0, v)
	else:
		# v^2 = s(e4 s^3 + e3 s^2 + e2 s + e1), with s = e1/x and y = e1*v/s^2
		curve = WeierstrassCurve(0, e2, 0, e3 * e1, e4 * e1 * e1)
		def forward( p ):
			s, v = p.x - t0, p.y
			if not s:
				return INFINITY
			return ProjPoint(e1 / s, e1 * v / (s * s))
		def inverse( p ):
			x, y = p.x, p.y
			if not x:
				raise ExceptionalPoint("{0} lies on the exceptional locus of the inverse map".format(p))
			s = e1 / x
			return ProjPoint(s + t0, y * s * s / e1)
	def checkedForward( p ):
		return curve.check(forward(quartic.check(p)))
	def checkedInverse( p ):
		return quartic.check(inverse(curve.check(p)))
	return CurveMap(quartic, curve, checkedForward, checkedInverse, "quartic to Weierstrass")

# -----------------------------------------------------------------------------
#
# FUNCTIONS
#
# -----------------------------------------------------------------------------

def twist( curve, d ):
	"""Returns the quadratic twist 'd*y^2 = f(x)' of the given Legendre or
	twisted curve."""
	return curve.twist(d)

def jInvariant( curve ):
	return curve.jInvariant()

def legendreOrbit( lam ):
	"""Returns the deduplicated list of the lambdas giving Legendre curves
	isomorphic to 'y^2 = x(x-1)(x-lambda)'."""
	lam = _coefficients(lam)[0]
	if not lam or not (lam - 1):
		raise CurveError("lambda must avoid {{0, 1}}, got {0}".format(symalg.render(lam)))
	images = (lam, 1 - lam, 1 / lam, 1 / (1 - lam), lam / (lam - 1), (lam - 1) / lam)
	res    = []
	for image in images:
		if not any(not (image - _) for _ in res):
			res.append(image)
	if isinstance(lam, Fraction):
		res.sort()
	return res

def genusBound( g, var="t" ):
	"""Returns the genus '(deg g - 1)//2' of 'w^2 = g(var)', bounding the
	rank of the twist by 'g' over the function field."""
	g      = symalg.asPoly(g)
	degree = symalg.degreeIn(g, var)
	if degree <= 0:
		raise CurveError("The twist polynomial must not be constant in {0}".format(var))
	if not symalg.isSquarefree(g, var):
		raise CurveError("The twist polynomial must be square-free in {0}".format(var))
	return (degree - 1) // 2

def _sqrt( value ):
	if isinstance(value, Fraction):
		return factor.rationalSqrt(value)
	return symalg.ratfuncSqrt(value)

def _scalingFactor( A1, B1, A2, B2 ):
	"""Returns 'u' with 'A2 = u^4 A1' and 'B2 = u^6 B1', or None."""
	if bool(A1) != bool(A2) or bool(B1) != bool(B2):
		return None
	if A1 and B1:
		u2 = (B2 / B1) / (A2 / A1)
		if (u2 * u2 - A2 / A1) or (u2 ** 3 - B2 / B1):
			return None
	elif A1:
		u2 = _sqrt(A2 / A1)
	else:
		if not isinstance(B1, Fraction):
			raise CurveError("Isomorphisms of j = 0 curves need rational coefficients")
		u2 = factor.rationalRoot(B2 / B1, 3)
	if u2 is None:
		return None
	return _sqrt(u2)

def findIsomorphism( source, target ):
	"""Returns a 'CurveMap' giving an isomorphism over Q between the two
	curves, or None when they are not isomorphic (while they may still be
	twists of each other)."""
	toS = source.weierstrass().then(source.weierstrass().target.shortModel())
	toT = target.weierstrass().then(target.weierstrass().target.shortModel())
	S, T = toS.target, toT.target
	u = _scalingFactor(S.a4, S.a6, T.a4, T.a6)
	if u is None:
		return None
	return toS.then(CurveMap.Scaling(S, T, u)).then(toT.inverted())

def twistClass( source, target ):
	"""Returns the square-free 'd' (an integer for rational curves) with
	'target' isomorphic to the twist of 'source' by 'd', or None when the
	j-invariants differ or the curves have j in {0, 1728} with no quadratic
	twist relation."""
	S = source.weierstrass().then(source.weierstrass().target.shortModel()).target
	T = target.weierstrass().then(target.weierstrass().target.shortModel()).target
	if S.jInvariant() != T.jInvariant():
		return None
	if S.a4 and S.a6:
		d = (T.a6 / S.a6) / (T.a4 / S.a4)
	elif S.a4:
		d = _sqrt(T.a4 / S.a4)
		if d is None:
			return None
	else:
		d = factor.rationalRoot(T.a6 / S.a6, 3) if isinstance(S.a6, Fraction) else None
		if d is None:
			return None
	if isinstance(d, Fraction):
		kernel, _, _ = factor.squareFreeKernelRat(d)
		return Fraction(kernel)
	return symalg.squarefreePart(d)

# EOF - vim: tw=80 ts=4 sw=4 noet
