#!/usr/bin/env python
# Encoding: utf8
# -----------------------------------------------------------------------------
# Project   : TwistCert
# -----------------------------------------------------------------------------
# Author    : TwistCert contributors
# -----------------------------------------------------------------------------
# License   : GNU Lesser General Public License
# -----------------------------------------------------------------------------
# Creation  : 02-Oct-2026
# Last mod  : 17-Oct-2026
# -----------------------------------------------------------------------------

import logging
from   fractions import Fraction
from   sympy.polys.domains import QQ
from   sympy.polys.fields  import field, FracElement
from   sympy.polys.rings   import PolyElement
from   twistcert import factor

__doc__ = """\
The symbolic algebra module is the exact substrate every other module relies
on. Polynomials ('MPoly') are sparse sympy polynomials over QQ and rational
functions ('RatFunc') are elements of the matching fraction field, both over
the fixed variable set 't, u, alpha, z, T, x'. Rational scalars ('Rat') are
'fractions.Fraction' and integers are Python integers.

On top of that the module offers what the constructions need and sympy does
not provide directly: gcds normalised in a main variable, square-free parts
modulo squares, fractional-linear substitutions and the quadratic extension
'Q(alpha)(t)[u]/(u^2 - q)' through the 'QuadExtElem' class.
"""

VARIABLES     = ("t", "u", "alpha", "z", "T", "x")
ALIASES       = {"α": "alpha"}
FIELD, t, u, alpha, z, T, x = field(",".join(VARIABLES), QQ)
RING          = FIELD.ring
GENERATORS    = dict(zip(VARIABLES, FIELD.gens))
U_INDEX       = VARIABLES.index("u")

class SymAlgError(Exception): pass
class ModulusMismatch(SymAlgError): pass
class DegenerateMap(SymAlgError): pass
class PoleError(SymAlgError, ZeroDivisionError): pass

# -----------------------------------------------------------------------------
#
# CONVERSIONS
#
# -----------------------------------------------------------------------------

def varIndex( name ):
	"""Returns the index of the given variable name in 'VARIABLES'."""
	name = ALIASES.get(name, name)
	if name not in VARIABLES:
		raise SymAlgError("Unknown variable: {0}, expected one of {1}".format(name, ", ".join(VARIABLES)))
	return VARIABLES.index(name)

def variable( name ):
	"""Returns the generator of the rational function field for 'name'."""
	return FIELD.gens[varIndex(name)]

def lift( value ):
	"""Lifts an int, Fraction, MPoly or RatFunc into the rational function
	field."""
	if isinstance(value, FracElement):
		return value
	elif isinstance(value, PolyElement):
		return FIELD(value)
	elif isinstance(value, Fraction):
		return FIELD(QQ(value.numerator, value.denominator))
	elif isinstance(value, int):
		return FIELD(value)
	else:
		raise SymAlgError("Cannot lift value of type {0}".format(type(value).__name__))

def toRat( value ):
	"""Converts a constant (int, Fraction, domain element, constant MPoly or
	RatFunc) to a 'Fraction'."""
	if isinstance(value, Fraction):
		return value
	elif isinstance(value, int):
		return Fraction(value)
	elif isinstance(value, FracElement):
		if not (value.numer.is_ground and value.denom.is_ground):
			raise SymAlgError("Not a constant: {0}".format(render(value)))
		return toRat(value.numer.LC) / toRat(value.denom.LC)
	elif isinstance(value, PolyElement):
		if not value.is_ground:
			raise SymAlgError("Not a constant: {0}".format(render(value)))
		return toRat(value.LC)
	else:
		return Fraction(int(value.numerator), int(value.denominator))

def isConstant( value ):
	if isinstance(value, (int, Fraction)):
		return True
	value = lift(value)
	return value.numer.is_ground and value.denom.is_ground

def isPolynomial( value ):
	return isinstance(value, PolyElement) or lift(value).denom.is_ground

def asPoly( value ):
	"""Returns the given value as an MPoly, failing when it has a
	non-constant denominator."""
	if isinstance(value, PolyElement):
		return value
	value = lift(value)
	if not value.denom.is_ground:
		raise SymAlgError("Not a polynomial: {0}".format(render(value)))
	return value.numer.quo_ground(value.denom.LC)

def normalize( value ):
	"""Returns the most specific representation of the given value: a
	'Fraction' for constants, an MPoly for polynomials and a RatFunc
	otherwise."""
	if isinstance(value, (int, Fraction)):
		return Fraction(value)
	value = lift(value)
	if isConstant(value):
		return toRat(value)
	if value.denom.is_ground:
		return asPoly(value)
	return value

def usedVariables( value ):
	"""Returns the names of the variables the value actually depends on."""
	value = lift(value)
	used  = set()
	for poly in (value.numer, value.denom):
		for monom in poly.monoms():
			for i, e in enumerate(monom):
				if e: used.add(VARIABLES[i])
	return [_ for _ in VARIABLES if _ in used]

# -----------------------------------------------------------------------------
#
# RENDERING
#
# -----------------------------------------------------------------------------

def _renderRat( value ):
	if value.denominator == 1:
		return str(value.numerator)
	return "{0}/{1}".format(value.numerator, value.denominator)

def _renderPoly( poly ):
	if not poly:
		return "0"
	res = []
	for monom, coeff in poly.terms():
		c       = toRat(coeff)
		factors = []
		for i, e in enumerate(monom):
			if   e == 1: factors.append(VARIABLES[i])
			elif e >  1: factors.append("{0}^{1}".format(VARIABLES[i], e))
		sign  = "-" if c < 0 else "+"
		c     = abs(c)
		if not factors:
			term = _renderRat(c)
		elif c == 1:
			term = "*".join(factors)
		else:
			term = "*".join([_renderRat(c)] + factors)
		if not res:
			res.append(term if sign == "+" else "-" + term)
		else:
			res.append("{0} {1}".format(sign, term))
	return " ".join(res)

def render( value ):
	"""Renders a Rat, MPoly, RatFunc or QuadExtElem as text that 'parser.parseExpr'
	reads back to the same value."""
	if isinstance(value, QuadExtElem):
		return "({0}) + ({1})*u".format(render(value.a), render(value.b))
	if isinstance(value, (int, Fraction)):
		return _renderRat(Fraction(value))
	value = lift(value)
	num   = _renderPoly(value.numer)
	if value.denom == 1:
		return num
	return "({0})/({1})".format(num, _renderPoly(value.denom))

# -----------------------------------------------------------------------------
#
# POLYNOMIAL TOOLS
#
# -----------------------------------------------------------------------------

def degreeIn( value, name ):
	"""Degree of the MPoly in the given variable, -1 for zero."""
	poly = asPoly(value)
	if not poly:
		return -1
	return max(_[varIndex(name)] for _ in poly.monoms())

def coeffIn( value, name, k ):
	"""Returns the coefficient of 'name^k' in the given MPoly, as an MPoly in
	the remaining variables."""
	poly  = asPoly(value)
	index = varIndex(name)
	res   = {}
	for monom, coeff in poly.terms():
		if monom[index] == k:
			m        = list(monom)
			m[index] = 0
			res[tuple(m)] = coeff
	return RING.from_dict(res)

def polyGCD( p, q, mainVar="t" ):
	"""Returns the gcd of the polynomials 'p' and 'q', made monic in 'mainVar'
	whenever its leading coefficient there is a constant (otherwise the
	primitive representative is returned)."""
	p, q = asPoly(p), asPoly(q)
	if not p and not q:
		raise SymAlgError("The gcd of two zero polynomials is undefined")
	g   = p.gcd(q)
	deg = degreeIn(g, mainVar)
	lc  = coeffIn(g, mainVar, deg)
	if lc.is_ground:
		g = g.quo_ground(lc.LC)
	return g

def squarefreeDecompose( value, mainVar="t" ):
	"""Returns '(constant, part)' where 'part' is the product of the
	irreducible factors of odd multiplicity of the given MPoly or RatFunc,
	normalised to be monic in 'mainVar', and 'constant' is the square-free
	integer representing the remaining rational constant modulo squares. The
	input is equal to 'constant * part' times a square of Q(vars)."""
	value = lift(value)
	if not value:
		raise SymAlgError("The square-free part of zero is undefined")
	part     = RING.one
	constant = Fraction(1)
	for poly in (value.numer, value.denom):
		c, factors = poly.sqf_list()
		constant  *= toRat(c)
		for f, k in factors:
			if k % 2: part *= f
	if degreeIn(part, mainVar) > 0:
		lc = coeffIn(part, mainVar, degreeIn(part, mainVar))
		if lc.is_ground:
			constant *= toRat(lc.LC)
			part      = part.quo_ground(lc.LC)
	kernel, _, _ = factor.squareFreeKernelRat(constant)
	return kernel, part

def squarefreePart( value, mainVar="t" ):
	"""Returns the representative 'constant * part' of the class of the value
	modulo squares, see 'squarefreeDecompose'."""
	kernel, part = squarefreeDecompose(value, mainVar)
	return part.mul_ground(QQ(kernel))

def isSquarefree( value, mainVar="t" ):
	"""Tells if the given polynomial has no repeated factor in 'mainVar'."""
	poly = asPoly(value)
	if degreeIn(poly, mainVar) <= 0:
		return True
	return degreeIn(polyGCD(poly, poly.diff(RING.gens[varIndex(mainVar)]), mainVar), mainVar) == 0

def ratfuncSqrt( value ):
	"""Returns a RatFunc 's' with 's^2 == value', or None when the value is not
	a square in Q(vars)."""
	value = lift(value)
	if not value:
		return value
	root = FIELD.one
	for poly, sign in ((value.numer, 1), (value.denom, -1)):
		c, factors = poly.sqf_list()
		for f, k in factors:
			if k % 2: return None
			root *= FIELD(f) ** (sign * (k // 2))
		cr = factor.rationalSqrt(toRat(c))
		if cr is None: return None
		root *= lift(cr) ** sign
	return root

def isSquare( value ):
	return ratfuncSqrt(value) is not None

def sameSquareClass( a, b ):
	"""Tells if 'a/b' is a square of Q(vars), the rational constant
	included."""
	a, b = lift(a), lift(b)
	if not a or not b:
		raise SymAlgError("Zero has no square class")
	return isSquare(a / b)

# -----------------------------------------------------------------------------
#
# SUBSTITUTION
#
# -----------------------------------------------------------------------------

def _composePoly( poly, name, value ):
	degree = degreeIn(poly, name)
	if degree < 0:
		return FIELD.zero
	res = FIELD.zero
	for k in range(degree, -1, -1):
		res = res * value + FIELD(coeffIn(poly, name, k))
	return res

def compose( value, name, substitute ):
	"""Substitutes the variable 'name' of the given MPoly/RatFunc with the
	given RatFunc, returning a reduced RatFunc."""
	value      = lift(value)
	substitute = lift(substitute)
	num        = _composePoly(value.numer, name, substitute)
	den        = _composePoly(value.denom, name, substitute)
	if not den:
		raise PoleError("Substitution {0} := {1} hits a pole of {2}".format(name, render(substitute), render(value)))
	return num / den

def evaluate( value, assignment ):
	"""Specializes the given MPoly/RatFunc at the '{name: Rat}' assignment,
	returning a RatFunc in the remaining variables. Raises 'PoleError' when
	the denominator vanishes."""
	value = lift(value)
	num, den = value.numer, value.denom
	for name, v in assignment.items():
		v   = Fraction(v)
		gen = RING.gens[varIndex(name)]
		c   = QQ(v.numerator, v.denominator)
		num = num.subs(gen, c)
		den = den.subs(gen, c)
	if not den:
		raise PoleError("Denominator of {0} vanishes at {1}".format(render(value), assignment))
	return FIELD(num) / FIELD(den)

def evaluateRat( value, assignment ):
	"""Like 'evaluate', but requires a constant result returned as a
	'Fraction'."""
	if isinstance(value, (int, Fraction)):
		return Fraction(value)
	return toRat(evaluate(value, assignment))

# -----------------------------------------------------------------------------
#
# FRACTIONAL LINEAR MAPS
#
# -----------------------------------------------------------------------------

class FracLinMap:
	"""The fractional linear map 'v |-> (a*v + b)/(c*v + d)' in the variable
	'var', where the entries are RatFuncs not involving 'var'."""

	@classmethod
	def Identity( cls, var="t" ):
		return cls(1, 0, 0, 1, var)

	@classmethod
	def FromRatFunc( cls, value, var="t" ):
		"""Reads the entries back from a RatFunc of degree at most one in
		'var'."""
		value    = lift(value)
		num, den = asPoly(value.numer), asPoly(value.denom)
		if degreeIn(num, var) > 1 or degreeIn(den, var) > 1:
			raise SymAlgError("Not a fractional linear map in {0}: {1}".format(var, render(value)))
		return cls(
			coeffIn(num, var, 1), coeffIn(num, var, 0),
			coeffIn(den, var, 1), coeffIn(den, var, 0),
			var
		)

	def __init__( self, a, b, c, d, var="t" ):
		self.a   = lift(a)
		self.b   = lift(b)
		self.c   = lift(c)
		self.d   = lift(d)
		self.var = ALIASES.get(var, var)
		varIndex(self.var)
		for entry in (self.a, self.b, self.c, self.d):
			if self.var in usedVariables(entry):
				raise SymAlgError("Map entries must not involve {0}".format(self.var))

	def determinant( self ):
		return self.a * self.d - self.b * self.c

	def isDegenerate( self ):
		return not self.determinant()

	def asRatFunc( self ):
		v = variable(self.var)
		return (self.a * v + self.b) / (self.c * v + self.d)

	def __call__( self, value ):
		"""Applies the map to a RatFunc or Rat, raising 'PoleError' when the
		value is sent to infinity."""
		if self.isDegenerate():
			raise DegenerateMap("Degenerate map: {0}".format(self))
		value = lift(value)
		den   = self.c * value + self.d
		if not den:
			raise PoleError("{0} sends {1} to infinity".format(self, render(value)))
		return (self.a * value + self.b) / den

	def specialize( self, assignment ):
		return FracLinMap(*([evaluate(_, assignment) for _ in (self.a, self.b, self.c, self.d)] + [self.var]))

	def normalized( self ):
		"""Returns '(alpha0, beta, delta)' such that the map is
		'(alpha0*v + beta)/(v + delta)', or None when 'c' is zero."""
		if not self.c:
			return None
		return (self.a / self.c, self.b / self.c, self.d / self.c)

	def permutes( self, roots ):
		"""Tells if the map permutes the given list of distinct values."""
		images = []
		for r in roots:
			try:
				images.append(self(r))
			except PoleError:
				return False
		remaining = [lift(_) for _ in roots]
		for image in images:
			match = [i for i, r in enumerate(remaining) if not (r - image)]
			if not match:
				return False
			remaining.pop(match[0])
		return True

	def __repr__( self ):
		return "<FracLinMap {0} |-> {1}>".format(self.var, render(self.asRatFunc()))

def composeFracLin( f, h, fvar=None ):
	"""Returns 'f(h(v))' as a reduced RatFunc, where 'fvar' is the variable of
	'f' to substitute (the map variable by default)."""
	if h.isDegenerate():
		raise DegenerateMap("Degenerate map: {0}".format(h))
	return compose(f, fvar or h.var, h.asRatFunc())

def rootPermutationIdentity( f, h, fvar=None ):
	"""Checks 'f(h(v)) = f(alpha0)(v+delta)f(v)(v+delta)^-4 / lc(f)' for a map
	'h = (alpha0*v + beta)/(v + delta)' permuting the roots of the cubic 'f'."""
	fvar       = fvar or h.var
	normalized = h.normalized()
	if normalized is None:
		return False
	alpha0, _, delta = normalized
	v     = variable(h.var)
	# Coefficients may be rational in the parameters, not in 'fvar'
	f     = lift(f)
	if degreeIn(f.denom, fvar) > 0:
		raise SymAlgError("Not a polynomial in {0}: {1}".format(fvar, render(f)))
	num   = f.numer
	lc    = lift(coeffIn(num, fvar, degreeIn(num, fvar))) / FIELD(f.denom)
	fv    = compose(f, fvar, v)
	lhs   = composeFracLin(f, h, fvar)
	rhs   = compose(f, fvar, alpha0) * (v + delta) * fv * (v + delta) ** -4 / lc
	return not (lhs - rhs)

# -----------------------------------------------------------------------------
#
# QUADRATIC EXTENSION
#
# -----------------------------------------------------------------------------

class QuadExtElem:
	"""An element 'a + b*u' of the extension by 'u^2 = q', where 'a', 'b' and
	the modulus 'q' are RatFuncs free of 'u'. All the arithmetic reduces 'u^2'
	through the modulus, so that equality is a comparison of components."""

	@classmethod
	def FromRatFunc( cls, value, modulus ):
		"""Reduces a RatFunc possibly involving 'u' to the 'a + b*u' form."""
		value    = lift(value)
		modulus  = lift(modulus)
		n0, n1   = cls._SplitU(value.numer, modulus)
		d0, d1   = cls._SplitU(value.denom, modulus)
		return cls(n0, n1, modulus) / cls(d0, d1, modulus)

	@classmethod
	def _SplitU( cls, poly, modulus ):
		even, odd = FIELD.zero, FIELD.zero
		powers    = [FIELD.one]
		for monom, coeff in poly.terms():
			k = monom[U_INDEX]
			m = list(monom)
			m[U_INDEX] = 0
			while len(powers) <= k // 2:
				powers.append(powers[-1] * modulus)
			term = FIELD(RING.from_dict({tuple(m): coeff})) * powers[k // 2]
			if k % 2:
				odd  += term
			else:
				even += term
		return even, odd

	def __init__( self, a, b=0, modulus=None ):
		if modulus is None:
			raise SymAlgError("QuadExtElem requires a modulus")
		self.a       = lift(a)
		self.b       = lift(b)
		self.modulus = lift(modulus)
		if "u" in usedVariables(self.modulus):
			raise SymAlgError("The modulus must not involve u")

	def _coerce( self, other ):
		if isinstance(other, QuadExtElem):
			if other.modulus is not self.modulus and other.modulus != self.modulus:
				raise ModulusMismatch("Modulus mismatch: {0} != {1}".format(render(self.modulus), render(other.modulus)))
			return other
		try:
			return QuadExtElem(lift(other), 0, self.modulus)
		except SymAlgError:
			return None

	def _new( self, a, b ):
		res         = QuadExtElem.__new__(QuadExtElem)
		res.a       = a
		res.b       = b
		res.modulus = self.modulus
		return res

	def isScalar( self ):
		return not self.b

	def isZero( self ):
		return not self.a and not self.b

	def conjugate( self ):
		"""The automorphism 'u |-> -u'."""
		return self._new(self.a, -self.b)

	def norm( self ):
		return self.a * self.a - self.b * self.b * self.modulus

	def inverse( self ):
		n = self.norm()
		if not n:
			raise PoleError("{0} is not invertible".format(render(self)))
		return self._new(self.a / n, -self.b / n)

	def evaluate( self, assignment, uValue ):
		"""Returns 'a + b*u' at the given assignment of the remaining
		variables and value of 'u' as a 'Fraction'."""
		a = evaluateRat(self.a, assignment)
		if not self.b:
			return a
		return a + evaluateRat(self.b, assignment) * Fraction(uValue)

	def specialize( self, assignment ):
		return QuadExtElem(evaluate(self.a, assignment), evaluate(self.b, assignment), evaluate(self.modulus, assignment))

	def __add__( self, other ):
		other = self._coerce(other)
		if other is None: return NotImplemented
		return self._new(self.a + other.a, self.b + other.b)

	def __sub__( self, other ):
		other = self._coerce(other)
		if other is None: return NotImplemented
		return self._new(self.a - other.a, self.b - other.b)

	def __mul__( self, other ):
		other = self._coerce(other)
		if other is None: return NotImplemented
		return self._new(
			self.a * other.a + self.b * other.b * self.modulus,
			self.a * other.b + self.b * other.a
		)

	def __truediv__( self, other ):
		other = self._coerce(other)
		if other is None: return NotImplemented
		return self * other.inverse()

	def __radd__( self, other ):
		return self.__add__(other)

	def __rsub__( self, other ):
		other = self._coerce(other)
		if other is None: return NotImplemented
		return other - self

	def __rmul__( self, other ):
		return self.__mul__(other)

	def __rtruediv__( self, other ):
		other = self._coerce(other)
		if other is None: return NotImplemented
		return other / self

	def __neg__( self ):
		return self._new(-self.a, -self.b)

	def __pow__( self, n ):
		if not isinstance(n, int):
			return NotImplemented
		if n < 0:
			return self.inverse() ** (-n)
		res, base = self._new(FIELD.one, FIELD.zero), self
		while n:
			if n & 1: res = res * base
			base = base * base
			n >>= 1
		return res

	def __eq__( self, other ):
		other = self._coerce(other)
		if other is None: return NotImplemented
		return not (self.a - other.a) and not (self.b - other.b)

	def __ne__( self, other ):
		res = self.__eq__(other)
		return res if res is NotImplemented else not res

	def __bool__( self ):
		return not self.isZero()

	__hash__ = None

	def __repr__( self ):
		return "<QuadExtElem {0} mod u^2 = {1}>".format(render(self), render(self.modulus))

def extAdd( e1, e2 ):
	return e1 + e2

def extMul( e1, e2 ):
	return e1 * e2

def extEq( e1, e2 ):
	return e1 == e2

def squareClassInExtension( value, modulus ):
	"""Returns a 'QuadExtElem' 's' with 's^2 == value' for a RatFunc free of
	'u', looking at 'value' and 'value * modulus', or None when neither is a
	square of Q(vars)."""
	value   = lift(value)
	modulus = lift(modulus)
	root    = ratfuncSqrt(value)
	if root is not None:
		return QuadExtElem(root, 0, modulus)
	root = ratfuncSqrt(value * modulus)
	if root is not None:
		# sqrt(value) = sqrt(value*q)/u = sqrt(value*q)*u/q
		return QuadExtElem(0, root / modulus, modulus)
	logging.debug("No square root of {0} in the extension".format(render(value)))
	return None

# EOF - vim: tw=80 ts=4 sw=4 noet
