#!/usr/bin/env python
# Encoding: utf8
# -----------------------------------------------------------------------------
# Project   : TwistCert
# -----------------------------------------------------------------------------
# Author    : TwistCert contributors
# -----------------------------------------------------------------------------
# License   : GNU Lesser General Public License
# -----------------------------------------------------------------------------
# Creation  : 12-Oct-2026
# Last mod  : 18-Oct-2026
# -----------------------------------------------------------------------------

import random, sys
from   fractions import Fraction
from   twistcert import certify, families
from   twistcert.symalg import variable, PoleError
from   twistcert.eccore import ProjPoint, CurveError, jInvariant, genusBound
from   twistcert.families import FamilyError

__doc__ = """\
The identity suite runs every symbolic identity the constructions rest on
and prints one '[PASS]' or '[FAIL]' line per identity. Like unit tests, the
checks are the 'test*' methods of 'IdentitySuite', which may depend on
resources provided by other checks (the symbolic families, for instance):

>   suite = IdentitySuite()
>   ok    = suite.run()

A suite created with 'perturb="thm51:E1.P2"' doubles the y-coordinate of
the named point before checking it, so that exactly that identity fails.
"""

SAMPLE_ALPHAS = (Fraction(2), Fraction(3), Fraction(5, 2), Fraction(-4), Fraction(7, 3))
LEMMA41_PAIRS = 20
LEMMA41_SEED  = 41

# -----------------------------------------------------------------------------
#
# DECORATORS
#
# -----------------------------------------------------------------------------

def provides(*names):
	"""Decorates a check method, telling that it provides a particular
	resource, that may be required by another check."""
	def _(f):
		if not hasattr(f, "_provides"): f._provides = []
		for name in names:
			if not name in f._provides:
				f._provides.append(name)
		return f
	return _

def depends(*names):
	"""Decorates a check method, telling that it depends on a particular
	resource."""
	def _(f):
		if not hasattr(f, "_depends"): f._depends = []
		for name in names:
			if not name in f._depends:
				f._depends.append(name)
		return f
	return _

# -----------------------------------------------------------------------------
#
# SUITE
#
# -----------------------------------------------------------------------------

class IdentitySuiteError(Exception): pass

class IdentitySuite:
	"""Each check records one or more named identities through 'expect'. A
	check raising an exception is reported as a failure under its own name,
	with the exception class unless it is a suite or family error, and does
	not provide its resources."""

	def __init__( self, perturb=None, out=None ):
		self.perturb   = perturb
		self.out       = out or sys.stdout
		self.results   = None
		self.provided  = None
		self.completed = None
		self.resources = None

	def setup( self ):
		self.results   = []
		self.provided  = []
		self.resources = {}
		self.tests     = self._getTests()
		self.remaining = list(self.tests)
		self.completed = []

	def _getTests( self ):
		res = []
		for key in dir(self):
			if key.startswith("test"):
				res.append(getattr(self, key))
		return res

	def _dependenciesMet( self, test ):
		if hasattr(test, "_depends"):
			for dep in test._depends:
				if dep not in self.provided: return False
		return True

	def _provide( self, test ):
		if hasattr(test, "_provides"):
			for prov in test._provides:
				if prov not in self.provided:
					self.provided.append(prov)

	def _nextTest( self ):
		"""Returns the next check whose dependencies are met, or None."""
		for remaining in self.remaining:
			if self._dependenciesMet(remaining):
				self.remaining.remove(remaining)
				return remaining
		return None

	def run( self ):
		"""Sets up and runs the checks, returning True when every identity
		holds."""
		self.setup()
		while True:
			test = self._nextTest()
			if test is None: break
			failures = len(self.failures())
			try:
				test()
			except (IdentitySuiteError, FamilyError, CurveError, PoleError) as e:
				self.expect(test.__name__[4:], False, str(e))
				continue
			except Exception as e:
				self.expect(test.__name__[4:], False, "{0}: {1}".format(e.__class__.__name__, e))
				continue
			# A failed identity does not withhold the resources of its check
			self._provide(test)
			if len(self.failures()) == failures:
				self.completed.append(test)
		for test in self.remaining:
			self.expect(test.__name__[4:], False, "depends on a failed check")
		percent = int(100.0 * len(self.completed) / len(self.tests))
		print("--", file=self.out)
		print("Completed {0:3d}%".format(percent), file=self.out)
		return not self.failures()

	def failures( self ):
		return [_ for _ in self.results if not _[1]]

	def expect( self, name, holds, reason=None ):
		holds = bool(holds)
		self.results.append((name, holds, reason))
		if holds:
			print("%-44s [PASS]" % (name), file=self.out)
		elif reason:
			print("%-44s [FAIL] (%s)" % (name, reason), file=self.out)
		else:
			print("%-44s [FAIL]" % (name), file=self.out)
		return holds

	def info( self, name, value ):
		print("%-44s %s" % (name, value), file=self.out)

	def _familyPoints( self, key, family ):
		for point in family.points:
			name = "{0}:{1}".format(key, point.name)
			y    = point.y * 2 if name == self.perturb else point.y
			self.expect(
				"{0} {1} on E{2}^g".format(key, point.name, point.curve),
				family.curve(point.curve).isOnCurve(ProjPoint(point.x, y))
			)

	# =========================================================================
	# CHECKS
	# =========================================================================

	def testA_Lemma41Pairs( self ):
		rng   = random.Random(LEMMA41_SEED)
		count = 0
		holds = True
		while count < LEMMA41_PAIRS:
			lambdas = [Fraction(rng.randint(-30, 30), rng.randint(1, 12)) for _ in range(2)]
			try:
				res = families.lemma41Construct(*lambdas)
			except (FamilyError, CurveError):
				continue
			count += 1
			holds  = holds and res.degree == 6 and res.genus == 2
		self.expect("lemma: {0} pairs, deg g = 6, genus 2".format(LEMMA41_PAIRS), holds)

	def testA_Lemma31Criterion( self ):
		res = families.lemma41Construct(Fraction(2), Fraction(3))
		u   = variable("u")
		f1, f2 = families.legendreCubic(2), families.legendreCubic(3)
		self.expect("pair criterion on x(u)", families.lemma31PairCriterion(f1, f2, res.xOfU(), res.xOfU(), u))

	@provides("aux")
	def testB_AuxCurve( self ):
		aux = families.auxCurve()
		self.resources["aux"] = aux
		self.expect("C_alpha seeds and (X, Y) on C'_alpha", True)
		self.expect("Jacobian of C_alpha is C'_alpha", aux.quartic.jacobian() == aux.weierstrass)

	@depends("aux")
	def testC_WeierstrassModel( self ):
		aux     = self.resources["aux"]
		mapping = aux.birationalMap()
		self.expect("j(model of C_alpha) = j(C'_alpha)", not (jInvariant(mapping.target) - jInvariant(aux.weierstrass)))
		for alpha in SAMPLE_ALPHAS:
			aux     = families.auxCurve(alpha)
			mapping = aux.birationalMap()
			cert    = certify.mazurInfiniteOrder(aux.weierstrass, aux.point)
			self.expect(
				"alpha = {0}: j agrees, (X, Y) infinite".format(alpha),
				jInvariant(mapping.target) == jInvariant(aux.weierstrass) and cert.isInfinite()
			)

	@provides("thm51")
	def testD_Theorem51( self ):
		family = families.familyTheorem51(verify=False)
		self._familyPoints("thm51", family)
		self.resources["thm51"] = family

	@provides("thm53")
	def testD_Theorem53( self ):
		family = families.familyTheorem53(verify=False)
		self._familyPoints("thm53", family)
		self.resources["thm53"] = family

	@depends("thm51", "thm53")
	def testE_Independence( self ):
		for key in ("thm51", "thm53"):
			for i, holds in enumerate(self.resources[key].independence()):
				self.expect("{0} E{1}: u -> -u separates P1, P2".format(key, i + 1), holds)

	@depends("thm51")
	def testF_Pipeline51( self ):
		report = families.pipelineTheorem51()
		self.expect("thm51 pipeline: k_i = lambda_i((1+lambda_i)z-lambda_i)", all(report.kMatchesMap))
		self.expect("thm51 pipeline: f2(z) = T^2 f1(z)", report.relationHolds)
		self.expect("thm51 pipeline: printed point on C", all(report.printedPointHolds))
		self.expect("thm51 pipeline: twist class of g_alpha", report.twistMatches)
		self.expect("thm51 pipeline: derived points verify", report.family.verify().verified)

	@depends("thm53")
	def testF_Pipeline53( self ):
		report = families.pipelineTheorem53()
		self.expect("thm53 pipeline: f2(z) = T^2 f1(z)", report.relationHolds)
		self.expect("thm53 pipeline: twist class of g_alpha", report.twistMatches)
		self.expect("thm53 pipeline: derived points verify", report.family.verify().verified)

	@depends("thm51")
	def testG_GenusBounds( self ):
		g6  = families.lemma41Construct(Fraction(2), Fraction(3)).g
		g12 = self.resources["thm51"].g
		self.expect("genus_bound deg 6 -> {0}".format(genusBound(g6, "u")), genusBound(g6, "u") == 2)
		self.expect("genus_bound deg 12 -> {0}".format(genusBound(g12, "t")), genusBound(g12, "t") == 5)
		self.info("thm51 excluded alpha", ", ".join(str(_) for _ in self.resources["thm51"].excludedAlphas()))

def verifyIdentities( perturb=None, out=None ):
	"""Runs the whole suite, returning True when every identity holds."""
	return IdentitySuite(perturb, out).run()

# EOF - vim: tw=80 ts=4 sw=4 noet
