#!/usr/bin/env python
# Encoding: utf8
# -----------------------------------------------------------------------------
# Project   : TwistCert
# -----------------------------------------------------------------------------
# Author    : TwistCert contributors
# -----------------------------------------------------------------------------
# License   : GNU Lesser General Public License
# -----------------------------------------------------------------------------
# Creation  : 07-Oct-2026
# Last mod  : 18-Oct-2026
# -----------------------------------------------------------------------------

import functools, logging
from   fractions import Fraction
from   sympy import Poly
from   twistcert import symalg, factor, certify, serialize
from   twistcert.symalg import (
	FracLinMap, QuadExtElem, PoleError, lift, asPoly, variable, compose,
	composeFracLin, evaluate, evaluateRat, render, squarefreePart,
	sameSquareClass, squareClassInExtension, rootPermutationIdentity,
	isConstant, degreeIn, isSquarefree, RING
)
from   twistcert.parser import parseRatFunc
from   twistcert.eccore import (
	ProjPoint, TwistedCurve, QuarticCurve, WeierstrassCurve,
	ExceptionalPoint, legendreOrbit, genusBound,
	quarticToWeierstrass, findIsomorphism
)

__doc__ = """\
The constructions producing simultaneous rank two twists of pairs of Legendre
curves 'E_i: y^2 = f_i(x) = x(x-1)(x-lambda_i)':

- 'lemma31PairCriterion' checks '(f2 o h2)/(f1 o h1) = M^2'
- 'lemma41Construct' builds the degree 6 twist 'g(u)' with one point on each
   twist, for any pair of non-isomorphic Legendre curves
- 'auxCurve' gives the quartic 'C_alpha: u^2 = alpha^2t^4 - (alpha^2+1)^2t^2
   + 4alpha^2', its Weierstrass model and known points
- 'familyTheorem51' and 'familyTheorem53' are the two one-parameter families
   of pairs with a degree 12 twist polynomial and four explicit points
- 'remark52Pipeline' re-derives such a family from '(lambda1, lambda2, h1, h2,
   T)' and builds a 'custom' family from user supplied maps
- 'generateTwists' walks the rational points of 'C_alpha' and streams
   certified 'TwistRecord' values.

Families are symbolic in 'alpha', 't' and 'u', their point coordinates
living in the extension 'Q(alpha)(t)[u]/(u^2 - q_alpha(t))'.
"""

class FamilyError(Exception): pass
class ExcludedParameter(FamilyError): pass
class IdentityFailure(FamilyError): pass

ALPHA_EXCLUDED = (Fraction(-1), Fraction(0), Fraction(1))
PRINTED_FAMILIES = ("thm51", "thm53")

QUARTIC   = "alpha^2*t^4 - (alpha^2+1)^2*t^2 + 4*alpha^2"
T_OF_T    = "(alpha^2-1)*t/(alpha*(t^2-2))"

# Coordinates as printed, one entry per (curve, label, x, y)
THEOREM51 = {
	"lambda1" : "-(alpha^2+1)^2/(alpha^2-1)^2",
	"lambda2" : "(alpha^2+1)^2/(4*alpha^2)",
	"g"       : "(t^4+4)*(t^4*(alpha^2-1)^2+4*t^2*(alpha^2+1)^2+4*(alpha^2-1)^2)*(alpha^2*t^4-(alpha^2+1)^2*t^2+4*alpha^2)",
	"points"  : (
		(1, "P1", "(t^4+4)*(alpha^2+1)^2/(4*u^2)", "(t^2-2)*(alpha^2+1)^3/(8*(alpha^2-1)*u^4)"),
		(1, "P2", "t^2/4+1/t^2",                   "(t^2-2)/(8*t^3*(alpha^2-1)*u)"),
		(2, "P1", "(t^4+4)*(alpha^2+1)^2/(4*u^2)", "t*(alpha^2+1)^3/(8*alpha*u^4)"),
		(2, "P2", "(t^4+4)/(t^2+2)^2",             "t/((t^2+2)^3*alpha*u)"),
	),
	"cpoint"  : (
		"(alpha^2+1)^3*t/((alpha^2-1)^2*u)",
		"(alpha^2+1)^3*(t^2+2)/(8*alpha^2*u)",
		"(alpha^2-1)*t/(alpha*(t^2-2))",
	),
}

THEOREM53 = {
	"lambda1" : "2*(1+alpha^4)/(-1+alpha^2)^2",
	"lambda2" : "-(-1+alpha^2)^2/(4*alpha^2)",
	"g"       : "-(t^4+4)*((alpha^2-1)^2*t^4+4*(alpha^2+1)^2*t^2+4*(alpha^2-1)^2)*(alpha^2*t^4-(alpha^2+1)^2*t^2+4*alpha^2)",
	"points"  : (
		(1, "P1", "-(t^4*(-1+alpha^2)^2+4*t^2*(1+alpha^2)^2+4*(-1+alpha^2)^2)/(4*u^2)", "(t^2-2)*(alpha^2+1)^3/(8*(alpha^2-1)*u^4)"),
		(1, "P2", "-(t^2-2)^2/(4*t^2)",                                                 "(t^2-2)/(8*t^3*(alpha^2-1)*u)"),
		(2, "P1", "-(t^4*(-1+alpha^2)^2+4*t^2*(1+alpha^2)^2+4*(-1+alpha^2)^2)/(4*u^2)", "t*(alpha^2+1)^3/(8*alpha*u^4)"),
		(2, "P2", "4*t^2/(t^2+2)^2",                                                    "t/((t^2+2)^3*alpha*u)"),
	),
	"cpoint"  : None,
}

# -----------------------------------------------------------------------------
#
# HELPERS
#
# -----------------------------------------------------------------------------

def legendreCubic( lam, var="x" ):
	"""Returns 'v(v-1)(v-lambda)' in the given variable."""
	v = variable(var)
	return v * (v - 1) * (v - lift(lam))

def remark52Map( lam ):
	"""The map 'z |-> lambda*z/((lambda+1)z - lambda)' sending '0, 1, lambda'
	to '0, lambda, 1'."""
	lam = lift(lam)
	return FracLinMap(lam, 0, lam + 1, -lam, "z")

def theorem53Map( lam ):
	"""The map 'z |-> (z - lambda)/((2-lambda)z - 1)'."""
	lam = lift(lam)
	return FracLinMap(1, -lam, 2 - lam, -1, "z")

def _rationalRoots( poly ):
	"""Rational roots in 'alpha' of an MPoly only involving 'alpha'."""
	poly = asPoly(poly)
	if not poly or poly.is_ground:
		return []
	symbol = RING.symbols[symalg.varIndex("alpha")]
	roots  = Poly(poly.as_expr(), symbol).ground_roots()
	return [Fraction(int(r.p), int(r.q)) for r in roots]

def excludedAlphas( lambda1, lambda2 ):
	"""Returns the sorted values of 'alpha' for which the pair degenerates:
	'alpha' in '{0, 1, -1}', a 'lambda_i' in '{0, 1, infinity}', or 'lambda2'
	in the isomorphism orbit of 'lambda1'."""
	lambda1, lambda2 = lift(lambda1), lift(lambda2)
	res = set(ALPHA_EXCLUDED)
	for lam in (lambda1, lambda2):
		for value in (lam, lam - 1):
			res.update(_rationalRoots(value.numer))
		res.update(_rationalRoots(lam.denom))
	for image in legendreOrbit(lambda1):
		diff = image - lambda2
		if not diff:
			raise FamilyError("lambda2 = {0} is in the orbit of lambda1 for every alpha".format(render(lambda2)))
		res.update(_rationalRoots(diff.numer))
	return sorted(res)

def checkAlpha( alpha, excluded=ALPHA_EXCLUDED ):
	alpha = Fraction(alpha)
	if alpha in ALPHA_EXCLUDED:
		raise ExcludedParameter("alpha must avoid {0, 1, -1}")
	if alpha in excluded:
		raise ExcludedParameter("alpha = {0} makes the pair of curves degenerate or isomorphic".format(alpha))
	return alpha

# -----------------------------------------------------------------------------
#
# LEMMAS
#
# -----------------------------------------------------------------------------

def lemma31PairCriterion( f1, f2, h1, h2, M, var="x" ):
	"""Tells if '(f2 o h2)/(f1 o h1) = M^2' holds exactly. The 'h_i' are either
	'FracLinMap' instances or non-constant RatFuncs substituted for 'var'."""
	for f in (f1, f2):
		if degreeIn(asPoly(f), var) != 3 or not isSquarefree(asPoly(f), var):
			raise FamilyError("Expected a cubic with distinct roots in {0}: {1}".format(var, render(f)))
	def substitute( f, h ):
		if isinstance(h, FracLinMap):
			return composeFracLin(f, h, var)
		h = lift(h)
		if isConstant(h):
			raise symalg.DegenerateMap("A constant map is degenerate: {0}".format(render(h)))
		return compose(f, var, h)
	lhs = substitute(f2, h2) / substitute(f1, h1)
	return not (lhs - lift(M) ** 2)

class Lemma41Result:

	def __init__( self, lambdas, g, curves, points ):
		self.lambdas = lambdas
		self.g       = g
		self.curves  = curves
		self.points  = points
		self.degree  = degreeIn(g, "u")
		self.genus   = genusBound(g, "u") if isSquarefree(g, "u") else None

	def xOfU( self ):
		return self.points[0].x

def lemma41Construct( lambda1, lambda2 ):
	"""Returns the degree 6 twist polynomial 'g(u)' making both twists of
	positive rank over Q(u), together with a point on each twist."""
	lambda1, lambda2 = lift(lambda1), lift(lambda2)
	for lam in (lambda1, lambda2):
		if not lam or not (lam - 1):
			raise FamilyError("lambda must avoid {{0, 1}}, got {0}".format(render(lam)))
	if any(not (image - lambda2) for image in legendreOrbit(lambda1)):
		raise FamilyError("E1 and E2 are isomorphic: {0} is in the orbit of {1}".format(render(lambda2), render(lambda1)))
	u  = variable("u")
	g  = (lambda1 - lambda2) * (u * u - 1) * (1 - lambda2 + (lambda1 - 1) * u * u) * (lambda1 * u * u - lambda2)
	x  = (lambda1 * u * u - lambda2) / (u * u - 1)
	points = (ProjPoint(x, 1 / (u * u - 1) ** 2), ProjPoint(x, u / (u * u - 1) ** 2))
	curves = (TwistedCurve.Legendre(lambda1, g), TwistedCurve.Legendre(lambda2, g))
	for curve, point in zip(curves, points):
		if not curve.isOnCurve(point):
			raise IdentityFailure("Lemma point {0} is not on {1}".format(point, curve))
	return Lemma41Result((lambda1, lambda2), asPoly(g), curves, points)

# -----------------------------------------------------------------------------
#
# AUXILIARY CURVE
#
# -----------------------------------------------------------------------------

class AuxCurve:
	"""The quartic 'C_alpha', its Weierstrass model 'C'_alpha' and the known
	rational points: the seeds '(0, 2alpha)' and '((alpha^2+1)/alpha, 2alpha)'
	on the quartic and '(X, Y)' on the Weierstrass model."""

	def __init__( self, alpha, quartic, weierstrass, seeds, point ):
		self.alpha       = alpha
		self.quartic     = quartic
		self.weierstrass = weierstrass
		self.seeds       = seeds
		self.point       = point

	def birationalMap( self ):
		"""The map from the quartic to a Weierstrass model sending the first
		seed to infinity."""
		return quarticToWeierstrass(self.quartic, self.seeds[0])

def auxCurve( alpha=None ):
	"""Returns the 'AuxCurve' for the given rational 'alpha', or for a
	symbolic one when None."""
	if alpha is None:
		a = variable("alpha")
	else:
		a = checkAlpha(alpha)
	a2 = a * a
	B  = (a2 + 1) ** 2
	quartic = QuarticCurve(a2, 0, -B, 0, 4 * a2)
	weierstrass = WeierstrassCurve.Short(-27 * (48 * a2 * a2 + B * B), -54 * B * (B * B - 144 * a2 * a2))
	X = 3 * B * (3 + 12 * a2 - 22 * a2 ** 2 + 12 * a2 ** 3 + 3 * a2 ** 4) / (4 * a2 * a2)
	Y = 27 * (a2 - 1) ** 2 * (1 + 11 * a2 + 37 * a2 ** 2 + 47 * a2 ** 3 + 47 * a2 ** 4 + 37 * a2 ** 5 + 11 * a2 ** 6 + a2 ** 7) / (8 * a2 ** 3)
	seeds = (ProjPoint(0 * a, 2 * a), ProjPoint((a2 + 1) / a, 2 * a))
	point = ProjPoint(X, Y)
	for seed in seeds:
		if not quartic.isOnCurve(seed):
			raise IdentityFailure("Seed {0} is not on {1}".format(seed, quartic))
	if not weierstrass.isOnCurve(point):
		raise IdentityFailure("(X, Y) is not on {0}".format(weierstrass))
	return AuxCurve(alpha, quartic, weierstrass, seeds, point)

# -----------------------------------------------------------------------------
#
# PAIR FAMILIES
#
# -----------------------------------------------------------------------------

class FamilyPoint:

	def __init__( self, curve, label, x, y ):
		self.curve = curve
		self.label = label
		self.x     = x
		self.y     = y

	@property
	def name( self ):
		return "E{0}.{1}".format(self.curve, self.label)

	def asProjPoint( self ):
		return ProjPoint(self.x, self.y)

	def specialize( self, assignment ):
		return FamilyPoint(self.curve, self.label, self.x.specialize(assignment), self.y.specialize(assignment))

	def __repr__( self ):
		return "<FamilyPoint {0}>".format(self.name)

class PairFamily:
	"""A pair of Legendre curves over 'Q(alpha)', the twist polynomial 'g' in
	't' and four points, two on each twist, with coordinates in the
	extension by 'u^2 = q(t)'. Specializing 'alpha' gives a family in 't, u'
	only."""

	def __init__( self, name, lambda1, lambda2, h1, h2, g, quartic, points, T=None, alpha=None ):
		self.name     = name
		self.lambdas  = (lift(lambda1), lift(lambda2))
		self.maps     = (h1, h2)
		self.g        = asPoly(g)
		self.quartic  = asPoly(quartic)
		self.points   = list(points)
		self.T        = None if T is None else lift(T)
		self.alpha    = alpha
		self.verified = False

	def cubic( self, i, var="x" ):
		return legendreCubic(self.lambdas[i - 1], var)

	def curve( self, i ):
		"""The symbolic twist of 'E_i' by 'g'."""
		return TwistedCurve.Legendre(self.lambdas[i - 1], self.g)

	def pointsOn( self, i ):
		return [_ for _ in self.points if _.curve == i]

	def identityChecks( self ):
		"""Returns '(point, holds)' for the four point-on-curve identities."""
		res = []
		for point in self.points:
			res.append((point, self.curve(point.curve).isOnCurve(point.asProjPoint())))
		return res

	def verify( self ):
		if self.verified:
			return self
		for point, holds in self.identityChecks():
			if not holds:
				raise IdentityFailure("{0}: {1} is not on its twisted curve".format(self.name, point.name))
		self.verified = True
		return self

	def independence( self ):
		"""Returns the function field independence verdict for each curve."""
		res = []
		for i in (1, 2):
			p1, p2 = [_.asProjPoint() for _ in self.pointsOn(i)]
			res.append(certify.verifyFunctionFieldIndependence(self.curve(i), p1, p2))
		return res

	def excludedAlphas( self ):
		if self.alpha is not None:
			return []
		return excludedAlphas(*self.lambdas)

	def genusBound( self ):
		return genusBound(self.g, "t")

	def specialize( self, alpha ):
		"""Returns the family at the given rational 'alpha'."""
		if self.alpha is not None:
			raise FamilyError("Family {0} is already specialized".format(self.name))
		alpha      = checkAlpha(alpha, self.excludedAlphas())
		assignment = {"alpha": alpha}
		res = PairFamily(
			self.name,
			evaluate(self.lambdas[0], assignment), evaluate(self.lambdas[1], assignment),
			self.maps[0].specialize(assignment), self.maps[1].specialize(assignment),
			evaluate(self.g, assignment), evaluate(self.quartic, assignment),
			[_.specialize(assignment) for _ in self.points],
			None if self.T is None else evaluate(self.T, assignment),
			alpha
		)
		res.verified = self.verified
		return res

	def lambdaValues( self ):
		return [symalg.toRat(_) for _ in self.lambdas]

	def twistValue( self, t ):
		return evaluateRat(self.g, {"t": t})

	def quarticValue( self, t ):
		return evaluateRat(self.quartic, {"t": t})

	def degeneracy( self, t, u ):
		"""Returns the reason why '(t, u)' cannot be specialized, or None."""
		if not u:
			return "u = 0"
		if self.T is not None:
			try:
				T = evaluateRat(self.T, {"t": t})
			except PoleError:
				return "T has a pole at t = {0}".format(t)
			if T * T == 1:
				return "T = {0} leaves z undefined".format(T)
		if not self.twistValue(t):
			return "g(t) = 0"
		return None

	def specializePoints( self, t, u ):
		"""Returns the four 'ProjPoint' at '(t, u)', raising 'PoleError' when
		a coordinate is undefined there."""
		assignment = {"t": Fraction(t)}
		return [ProjPoint(_.x.evaluate(assignment, u), _.y.evaluate(assignment, u)) for _ in self.points]

	def __repr__( self ):
		return "<PairFamily {0} alpha={1}>".format(self.name, "symbolic" if self.alpha is None else self.alpha)

def _fromExpressions( name, data, maps ):
	quartic  = asPoly(parseRatFunc(QUARTIC))
	lambda1  = parseRatFunc(data["lambda1"])
	lambda2  = parseRatFunc(data["lambda2"])
	points   = []
	for curve, label, x, y in data["points"]:
		points.append(FamilyPoint(
			curve, label,
			QuadExtElem.FromRatFunc(parseRatFunc(x), quartic),
			QuadExtElem.FromRatFunc(parseRatFunc(y), quartic),
		))
	return PairFamily(
		name, lambda1, lambda2, maps(lambda1), maps(lambda2),
		parseRatFunc(data["g"]), quartic, points, parseRatFunc(T_OF_T)
	)

@functools.lru_cache(maxsize=None)
def _symbolicFamily( name ):
	if name == "thm51":
		return _fromExpressions(name, THEOREM51, remark52Map)
	elif name == "thm53":
		return _fromExpressions(name, THEOREM53, theorem53Map)
	raise FamilyError("Unknown family: {0}".format(name))

def familyTheorem51( alpha=None, verify=True ):
	"""The family with 'lambda1 = -(alpha^2+1)^2/(alpha^2-1)^2' and
	'lambda2 = (alpha^2+1)^2/(4alpha^2)'. The four point identities are
	checked symbolically once, a failure being an 'IdentityFailure'."""
	family = _symbolicFamily("thm51")
	if verify: family.verify()
	return family if alpha is None else family.specialize(alpha)

def familyTheorem53( alpha=None, verify=True ):
	"""The family with 'lambda1 = 2(1+alpha^4)/(alpha^2-1)^2' and
	'lambda2 = -(alpha^2-1)^2/(4alpha^2)', twisted by the negated 'g'."""
	family = _symbolicFamily("thm53")
	if verify: family.verify()
	return family if alpha is None else family.specialize(alpha)

# -----------------------------------------------------------------------------
#
# DERIVATION PIPELINE
#
# -----------------------------------------------------------------------------

class PipelineReport:
	"""The outcome of each step of 'remark52Pipeline'."""

	def __init__( self ):
		self.k                 = []
		self.kMatchesMap       = []
		self.rootIdentities    = []
		self.relationHolds     = None
		self.zOfT              = None
		self.zOft              = None
		self.cValues           = []
		self.cPoint            = []
		self.printedPointHolds = None
		self.twistValue        = None
		self.twistClass        = None
		self.twistMatches      = None
		self.family            = None

	def lines( self ):
		res = []
		for i, k in enumerate(self.k):
			res.append("k{0}(z) = {1}".format(i + 1, render(k)))
		res.append("f2(z) = T^2 f1(z): {0}".format(self.relationHolds))
		res.append("root permutation identities: {0}".format(self.rootIdentities))
		if self.printedPointHolds is not None:
			res.append("printed C point: {0}".format(self.printedPointHolds))
		res.append("twist square class: {0}".format(render(self.twistClass)))
		if self.twistMatches is not None:
			res.append("matches g_alpha: {0}".format(self.twistMatches))
		return res

def remark52Pipeline( lambda1, lambda2, h1, h2, T, quartic=None, expectedTwist=None, printedPoint=None, name="custom" ):
	"""Derives a pair family from two root-permuting maps 'h_i' (in 'z') and a
	parametrization 'T(t)': computes 'k_i', checks 'f2(z) = T^2 f1(z)' for
	'z = (-lambda2 + lambda1 T^2)/(-1 + T^2)', finds the point of the curve
	'z1^2 = k1(z(t)), z2^2 = k2(z(t)), z3^2 = f2/f1(z(t))' over the extension
	by 'u^2 = quartic', and builds the four points of the resulting family."""
	report  = PipelineReport()
	lambdas = (lift(lambda1), lift(lambda2))
	maps    = (h1, h2)
	q       = asPoly(parseRatFunc(QUARTIC) if quartic is None else quartic)
	zvar    = maps[0].var
	for i in (0, 1):
		lam, h = lambdas[i], maps[i]
		f      = legendreCubic(lam, "x")
		if not h.permutes([0, 1, lam]):
			raise FamilyError("h{0} does not permute the roots 0, 1, lambda{0}".format(i + 1))
		ratio  = composeFracLin(f, h, "x") / compose(f, "x", variable(zvar))
		k      = squarefreePart(ratio, zvar)
		report.k.append(k)
		report.kMatchesMap.append(sameSquareClass(k, lam * ((1 + lam) * variable(zvar) - lam)))
		report.rootIdentities.append(rootPermutationIdentity(f, h, "x"))
	if sameSquareClass(report.k[0], report.k[1]):
		raise FamilyError("k1 and k2 are not distinct modulo squares")
	if not all(report.rootIdentities):
		raise IdentityFailure("The root permutation identity fails")
	Tvar   = variable("T")
	zT     = (lambdas[0] * Tvar ** 2 - lambdas[1]) / (Tvar ** 2 - 1)
	f1, f2 = legendreCubic(lambdas[0], "x"), legendreCubic(lambdas[1], "x")
	report.zOfT          = zT
	report.relationHolds = not (compose(f2, "x", zT) - Tvar ** 2 * compose(f1, "x", zT))
	if not report.relationHolds:
		raise IdentityFailure("f2(z) = T^2 f1(z) does not hold")
	zt = compose(zT, "T", T)
	report.zOft    = zt
	report.cValues = [compose(k, zvar, zt) for k in report.k] + [compose(f2, "x", zt) / compose(f1, "x", zt)]
	for value in report.cValues:
		root = squareClassInExtension(value, q)
		if root is None:
			raise FamilyError("The curve C has no point over the extension by u^2 = {0}".format(render(q)))
		report.cPoint.append(root)
	if printedPoint:
		report.printedPointHolds = []
		for expr, value in zip(printedPoint, report.cValues):
			z = QuadExtElem.FromRatFunc(parseRatFunc(expr) if isinstance(expr, str) else expr, q)
			report.printedPointHolds.append(z * z == value)
		if not all(report.printedPointHolds):
			raise IdentityFailure("The printed point is not on C")
	G = compose(f1, "x", zt)
	report.twistValue = G
	report.twistClass = squarefreePart(G, "t")
	if expectedTwist is not None:
		report.twistMatches = sameSquareClass(G, expectedTwist)
	g = expectedTwist if report.twistMatches else report.twistClass
	points = []
	for i in (0, 1):
		f = legendreCubic(lambdas[i], "x")
		for label, x in (("P1", zt), ("P2", maps[i](zt))):
			y = squareClassInExtension(compose(f, "x", x) / lift(g), q)
			if y is None:
				raise FamilyError("No point on the twist of E{0} above x = {1}".format(i + 1, render(x)))
			points.append(FamilyPoint(i + 1, label, QuadExtElem(x, 0, q), y))
	report.family = PairFamily(name, lambdas[0], lambdas[1], h1, h2, g, q, points, T)
	return report

def pipelineTheorem51():
	family = familyTheorem51(verify=False)
	return remark52Pipeline(
		family.lambdas[0], family.lambdas[1], family.maps[0], family.maps[1], family.T,
		family.quartic, family.g, THEOREM51["cpoint"], "thm51"
	)

def pipelineTheorem53():
	family = familyTheorem53(verify=False)
	return remark52Pipeline(
		family.lambdas[0], family.lambdas[1], family.maps[0], family.maps[1], family.T,
		family.quartic, family.g, None, "thm53"
	)

def customFamily( lambda1, lambda2, h1, h2, T ):
	"""Builds a family through the pipeline from user expressions: the
	lambdas and 'T' in 'alpha' (and 't'), the maps as RatFuncs in 'z'."""
	lambda1, lambda2 = lift(lambda1), lift(lambda2)
	maps = [_ if isinstance(_, FracLinMap) else FracLinMap.FromRatFunc(_, "z") for _ in (h1, h2)]
	return remark52Pipeline(lambda1, lambda2, maps[0], maps[1], T).family.verify()

def familyByName( name, **options ):
	"""Returns the symbolic family with the given name ('thm51', 'thm53' or
	'custom' with 'lambda1', 'lambda2', 'h1', 'h2' and 'T' options)."""
	if name == "thm51":
		return familyTheorem51()
	elif name == "thm53":
		return familyTheorem53()
	elif name == "custom":
		missing = [_ for _ in ("lambda1", "lambda2", "h1", "h2", "T") if options.get(_) is None]
		if missing:
			raise FamilyError("The custom family needs {0}".format(", ".join(missing)))
		return customFamily(options["lambda1"], options["lambda2"], options["h1"], options["h2"], options["T"])
	raise FamilyError("Unknown family: {0}".format(name))

# -----------------------------------------------------------------------------
#
# TWIST RECORDS
#
# -----------------------------------------------------------------------------

class TwistRecord:
	"""One certified twist: the point '(t, u)' of 'C_alpha', 'd = g(t)', its
	square-free reduction, both twisted curves, the four specialized points
	and their certificates."""

	def __init__( self, family, alpha, t, u, quartic, dRaw, dSquarefree, complete, curves, points, orders, independence, walk=None ):
		self.family       = family
		self.alpha        = Fraction(alpha)
		self.t            = Fraction(t)
		self.u            = Fraction(u)
		self.quartic      = quartic
		self.dRaw         = Fraction(dRaw)
		self.dSquarefree  = Fraction(dSquarefree)
		self.complete     = complete
		self.curves       = list(curves)
		self.points       = list(points)
		self.orders       = list(orders)
		self.independence = list(independence)
		self.walk         = walk

	def curveFor( self, index ):
		return self.curves[index // 2]

	def isCertified( self ):
		return all(_.isInfinite() for _ in self.orders) and all(_.isIndependent() for _ in self.independence)

	def recheck( self, family=None ):
		"""Re-verifies the record from its own data, returning the list of
		failures (empty when everything reproduces). The symbolic 'family' is
		rebuilt from the record name when not given, which is only possible
		for the printed families."""
		failures = []
		t, u = self.t, self.u
		if u * u != self.quartic.value(t):
			failures.append("u^2 != q(t)")
		failures.extend(self._recheckFamily(family))
		if not self.dSquarefree or not factor.isRationalSquare(self.dRaw / self.dSquarefree):
			failures.append("d_raw and d_squarefree are not in the same square class")
		for curve in self.curves:
			if curve.d not in (self.dRaw, self.dSquarefree):
				failures.append("curve twisted by {0}, not by d".format(curve.d))
		for i, point in enumerate(self.points):
			curve = self.curveFor(i)
			if not curve.isOnCurve(point):
				failures.append("point {0} is not on its curve".format(i + 1))
				continue
			order = certify.mazurInfiniteOrder(curve, point)
			if not order.sameVerdict(self.orders[i]) or self.orders[i].point != point:
				failures.append("order of point {0} does not reproduce: {1}".format(i + 1, order.label()))
		for i, report in enumerate(self.independence):
			curve  = self.curves[i]
			p1, p2 = self.points[2 * i], self.points[2 * i + 1]
			if report.points[0] != p1 or report.points[1] != p2:
				failures.append("independence report {0} refers to other points".format(i + 1))
				continue
			if not all(curve.isOnCurve(_) for _ in (p1, p2)):
				continue
			scan = certify.relationScan(curve, p1, p2, report.bound)
			if [tuple(_) for _ in scan.relations] != [tuple(_) for _ in report.relations]:
				failures.append("relation scan {0} does not reproduce".format(i + 1))
		return failures

	def _recheckFamily( self, family ):
		"""Checks that 'alpha', 't' and the family reproduce 'd_raw', the
		lambdas of both curves and the quartic."""
		if family is None:
			if self.family not in PRINTED_FAMILIES:
				return ["family {0} cannot be rebuilt from the record alone".format(self.family)]
			family = _symbolicFamily(self.family)
		elif family.name != self.family:
			return ["record family {0} is not {1}".format(self.family, family.name)]
		try:
			spec = family.specialize(self.alpha)
			aux  = auxCurve(self.alpha)
		except (FamilyError, PoleError) as e:
			return ["alpha = {0} does not specialize {1}: {2}".format(self.alpha, self.family, e)]
		failures = []
		if self.quartic.coefficients() != aux.quartic.coefficients():
			failures.append("quartic is not C_alpha")
		try:
			if spec.twistValue(self.t) != self.dRaw:
				failures.append("d_raw != g(t)")
		except PoleError as e:
			failures.append("g has a pole at t = {0}: {1}".format(self.t, e))
		if [_.lam for _ in self.curves] != spec.lambdaValues():
			failures.append("curve lambdas are not the lambdas of {0} at alpha = {1}".format(self.family, self.alpha))
		return failures

	def asDict( self ):
		return {
			"family"             : self.family,
			"alpha"              : serialize.encodeRat(self.alpha),
			"t"                  : serialize.encodeRat(self.t),
			"u"                  : serialize.encodeRat(self.u),
			"walk"               : self.walk,
			"quartic"            : serialize.encodeCurve(self.quartic),
			"d_raw"              : serialize.encodeRat(self.dRaw),
			"d_squarefree"       : serialize.encodeRat(self.dSquarefree),
			"reduction_complete" : self.complete,
			"curves"             : [serialize.encodeCurve(_) for _ in self.curves],
			"points"             : [serialize.encodePoint(_) for _ in self.points],
			"orders"             : [_.asDict() for _ in self.orders],
			"independence"       : [_.asDict() for _ in self.independence],
		}

	@classmethod
	def FromDict( cls, value ):
		try:
			res = cls(
				value["family"], serialize.decodeRat(value["alpha"]),
				serialize.decodeRat(value["t"]), serialize.decodeRat(value["u"]),
				serialize.decodeCurve(value["quartic"]),
				serialize.decodeRat(value["d_raw"]), serialize.decodeRat(value["d_squarefree"]),
				bool(value["reduction_complete"]),
				[serialize.decodeCurve(_) for _ in value["curves"]],
				[serialize.decodePoint(_) for _ in value["points"]],
				[certify.OrderCertificate.FromDict(_) for _ in value["orders"]],
				[certify.IndependenceReport.FromDict(_) for _ in value["independence"]],
				value.get("walk")
			)
		except (KeyError, TypeError) as e:
			raise serialize.SchemaError("Malformed record: missing or invalid {0}".format(e))
		if len(res.curves) != 2 or len(res.points) != 4 or len(res.orders) != 4 or len(res.independence) != 2:
			raise serialize.SchemaError("A record has 2 curves, 4 points, 4 orders and 2 reports")
		return res

	def __repr__( self ):
		return "<TwistRecord t={0} d={1}>".format(self.t, self.dSquarefree)

# -----------------------------------------------------------------------------
#
# GENERATOR
#
# -----------------------------------------------------------------------------

def crossCheckOrders( curves, orders, primes=None, workers=1 ):
	"""Re-certifies each order with the mod p torsion bound over 'primes'
	(the first good primes when None), raising 'IdentityFailure' when a
	verdict differs from the one of the given certificate."""
	tasks  = [("modp", (curves[i // 2], cert.point, primes)) for i, cert in enumerate(orders)]
	checks = certify.certifyPoints(tasks, workers)
	for i, (cert, check) in enumerate(zip(orders, checks)):
		if not check.sameVerdict(cert):
			raise IdentityFailure("Point {0}: {1} by {2}, {3} by {4}".format(
				i + 1, cert.label(), cert.method, check.label(), check.method
			))
	return checks

def walkPoints( curve, q0, q1, limit ):
	"""Yields '(n, m, n*q0 + m*q1)' by increasing '|n| + |m|', then
	lexicographically, skipping the identity and already visited points.
	At most 'limit' combinations are visited."""
	seen    = set()
	visited = 0
	level   = 1
	while visited < limit:
		pairs = sorted(set((n, s * (level - abs(n))) for n in range(-level, level + 1) for s in (1, -1)))
		for n, m in pairs:
			if visited >= limit:
				return
			visited += 1
			point = curve.combine(n, q0, m, q1)
			if point.isInfinity() or point in seen:
				logging.debug("Walk ({0}, {1}): identity or already visited".format(n, m))
				continue
			seen.add(point)
			yield n, m, point
		level += 1

def _walkSeeds( aux ):
	"""Returns the birational map and the two walk generators, 'Q0' the image
	of '(X, Y)' and 'Q1' the image of the second seed."""
	mapping = aux.birationalMap()
	iso     = findIsomorphism(aux.weierstrass, mapping.target)
	if iso is None:
		raise IdentityFailure("C'_alpha is not isomorphic to the model of C_alpha")
	return mapping, iso.forward(aux.point), mapping.forward(aux.seeds[1])

def generateTwists( alpha, count, config=None, family=None ):
	"""Streams up to 'count' certified 'TwistRecord' for the given 'alpha',
	walking the rational points of 'C_alpha'. Candidates that are degenerate,
	duplicates by square class, or not fully certified are logged and
	skipped."""
	from twistcert.config import RunConfig
	config   = config or RunConfig()
	symbolic = family or familyTheorem51()
	spec     = symbolic.specialize(alpha)
	alpha    = spec.alpha
	aux      = auxCurve(alpha)
	mapping, q0, q1 = _walkSeeds(aux)
	curves   = [spec.lambdaValues()[0], spec.lambdaValues()[1]]
	seen     = []
	produced = 0
	for n, m, point in walkPoints(mapping.target, q0, q1, config.walk_limit):
		if produced >= count:
			return
		walk = {"n": n, "m": m}
		try:
			t, u = mapping.inverse(point).asTuple()
		except ExceptionalPoint as e:
			logging.info("Skipping ({0}, {1}): {2}".format(n, m, e))
			continue
		if u * u != spec.quarticValue(t):
			raise IdentityFailure("Walk point ({0}, {1}) gives u^2 != q(t)".format(t, u))
		reason = spec.degeneracy(t, u)
		if reason:
			logging.info("Skipping ({0}, {1}) at t = {2}: {3}".format(n, m, t, reason))
			continue
		try:
			points = spec.specializePoints(t, u)
		except PoleError as e:
			logging.info("Skipping ({0}, {1}) at t = {2}: {3}".format(n, m, t, e))
			continue
		dRaw = spec.twistValue(t)
		if any(factor.isRationalSquare(dRaw / _) for _ in seen):
			logging.info("Skipping ({0}, {1}) at t = {2}: duplicate square class".format(n, m, t))
			continue
		kernel, scale, complete = factor.squareFreeKernelRat(dRaw, config.trial_bound, config.rho_budget)
		raw = [TwistedCurve.Legendre(_, dRaw) for _ in curves]
		for i, p in enumerate(points):
			if not raw[i // 2].isOnCurve(p):
				raise IdentityFailure("Specialized point {0} is not on its curve at t = {1}".format(spec.points[i].name, t))
		if complete:
			maps   = [_.retwist(kernel) for _ in raw]
			twists = [_.target for _ in maps]
			points = [maps[i // 2].forward(p) for i, p in enumerate(points)]
		else:
			twists = raw
		if twists[0].jInvariant() == twists[1].jInvariant():
			logging.info("Skipping ({0}, {1}) at t = {2}: isomorphic twists".format(n, m, t))
			continue
		tasks = [("order", (twists[i // 2], p)) for i, p in enumerate(points)]
		for i in (0, 1):
			tasks.append(("independence", (
				twists[i], points[2 * i], points[2 * i + 1], config.relation_bound,
				config.doublings, config.tolerance, config.digit_budget
			)))
		results = certify.certifyPoints(tasks, config.workers)
		record  = TwistRecord(
			spec.name, alpha, t, u, aux.quartic, dRaw, Fraction(kernel), complete,
			twists, points, results[:4], results[4:], walk
		)
		seen.append(dRaw)
		if not record.isCertified():
			logging.info("Skipping ({0}, {1}) at t = {2}: not certified ({3})".format(
				n, m, t, ", ".join([_.label() for _ in record.orders + record.independence])
			))
			continue
		crossCheckOrders(twists, record.orders, config.primes, config.workers)
		produced += 1
		logging.info("Record {0}: t = {1}, d = {2}".format(produced, t, kernel))
		yield record
	if produced < count:
		logging.warning("Walk limit {0} reached after {1} of {2} records".format(config.walk_limit, produced, count))

# EOF - vim: tw=80 ts=4 sw=4 noet
