# Encoding: utf8
import json
from   fractions import Fraction as F
import pytest
from   twistcert import certify, families, factor
from   twistcert.certify import mazurInfiniteOrder
from   twistcert.families import FamilyError, ExcludedParameter
from   twistcert.symalg import PoleError, FracLinMap, variable, asPoly, lift
from   twistcert.eccore import ProjPoint, TwistedCurve, WeierstrassCurve

E37 = WeierstrassCurve(0, 0, 1, -1, 0)
P37 = ProjPoint(F(0), F(0))

# -----------------------------------------------------------------------------
#
# PARAMETERS
#
# -----------------------------------------------------------------------------

def test_alpha_checks():
	for alpha in (0, 1, -1):
		with pytest.raises(ExcludedParameter):
			families.checkAlpha(alpha)
		with pytest.raises(ExcludedParameter):
			families.auxCurve(alpha)
	assert families.checkAlpha(2) == 2
	with pytest.raises(ExcludedParameter):
		families.checkAlpha(3, [F(3)])

def test_excluded_alphas():
	family   = families.familyTheorem51(verify=False)
	excluded = family.excludedAlphas()
	assert set((F(-1), F(0), F(1))) <= set(excluded)
	assert excluded == sorted(excluded)
	assert F(2) not in excluded
	assert family.genusBound() == 5

# -----------------------------------------------------------------------------
#
# LEMMAS
#
# -----------------------------------------------------------------------------

def test_lemma41():
	res = families.lemma41Construct(2, 3)
	u   = variable("u")
	assert res.g == asPoly(-(u * u - 1) * (u * u - 2) * (2 * u * u - 3))
	assert (res.degree, res.genus) == (6, 2)
	for curve, point in zip(res.curves, res.points):
		assert curve.isOnCurve(point)
	for lambdas in ((2, -1), (2, F(1, 2)), (F(-25, 9), 1 + F(25, 9)), (1, 3)):
		with pytest.raises(FamilyError):
			families.lemma41Construct(*lambdas)

def test_lemma31():
	x, u = variable("x"), variable("u")
	f1, f2 = families.legendreCubic(2), families.legendreCubic(3)
	res = families.lemma41Construct(2, 3)
	assert families.lemma31PairCriterion(f1, f2, res.xOfU(), res.xOfU(), u)
	assert not families.lemma31PairCriterion(f1, f2, res.xOfU(), res.xOfU(), 2 * u)
	assert families.lemma31PairCriterion(f1, f1, x, x, 1)
	assert not families.lemma31PairCriterion(f1, f2, x, x, 1)

def test_lemma31_on_z_of_T():
	T      = variable("T")
	l1, l2 = F(-25, 9), F(25, 16)
	z      = (T * T * lift(l1) - lift(l2)) / (T * T - 1)
	f1, f2 = families.legendreCubic(l1), families.legendreCubic(l2)
	assert families.lemma31PairCriterion(f1, f2, z, z, T)
	with pytest.raises(FamilyError):
		families.lemma31PairCriterion(f1, variable("x") ** 2, z, z, T)

# -----------------------------------------------------------------------------
#
# AUXILIARY CURVE
#
# -----------------------------------------------------------------------------

def test_aux_curve_at_two():
	aux = families.auxCurve(2)
	assert aux.quartic.coefficients() == (4, 0, -25, 0, 16)
	assert aux.weierstrass == WeierstrassCurve.Short(-37611, 2266650)
	assert aux.point.x == F(92625, 64)
	assert aux.seeds[0] == ProjPoint(F(0), F(4))
	assert aux.seeds[1] == ProjPoint(F(5, 2), F(4))
	assert aux.quartic.jacobian() == aux.weierstrass
	assert aux.weierstrass.isOnCurve(aux.weierstrass.double(aux.point))

def test_aux_curve_symbolic():
	aux     = families.auxCurve()
	mapping = aux.birationalMap()
	assert not (mapping.target.jInvariant() - aux.weierstrass.jInvariant())
	assert mapping.forward(aux.seeds[0]).isInfinity()

@pytest.mark.parametrize("alpha", [F(2), F(3), F(5, 2), F(-4), F(7, 3)])
def test_aux_point_infinite( alpha ):
	aux = families.auxCurve(alpha)
	assert mazurInfiniteOrder(aux.weierstrass, aux.point).isInfinite()
	mapping = aux.birationalMap()
	assert mapping.target.jInvariant() == aux.weierstrass.jInvariant()

# -----------------------------------------------------------------------------
#
# FAMILIES
#
# -----------------------------------------------------------------------------

def test_specialized_lambdas():
	assert families.familyTheorem51(2, verify=False).lambdaValues() == [F(-25, 9), F(25, 16)]
	assert families.familyTheorem53(2, verify=False).lambdaValues() == [F(34, 9), F(-9, 16)]
	spec = families.familyTheorem51(2, verify=False)
	with pytest.raises(FamilyError):
		spec.specialize(3)
	with pytest.raises(ExcludedParameter):
		families.familyTheorem51(1, verify=False)

def test_specialized_points():
	spec = families.familyTheorem51(2, verify=False)
	with pytest.raises(PoleError):
		spec.specializePoints(0, 4)
	t, u = F(5, 2), F(4)
	assert spec.quarticValue(t) == u * u
	assert spec.degeneracy(t, u) is None
	assert spec.degeneracy(t, 0) == "u = 0"
	d      = spec.twistValue(t)
	curves = [TwistedCurve.Legendre(_, d) for _ in spec.lambdaValues()]
	points = spec.specializePoints(t, u)
	assert [_.name for _ in spec.points] == ["E1.P1", "E1.P2", "E2.P1", "E2.P2"]
	for i, point in enumerate(points):
		assert curves[i // 2].isOnCurve(point)

def test_family_by_name():
	with pytest.raises(FamilyError):
		families.familyByName("thm99")
	with pytest.raises(FamilyError):
		families.familyByName("custom", lambda1=F(2))

def test_walk_order():
	walk = list(families.walkPoints(E37, P37, E37.double(P37), 8))
	assert [(n, m) for n, m, _ in walk] == [(-1, 0), (0, -1), (0, 1), (1, 0), (-1, -1), (0, -2)]
	assert walk[3][2] == P37
	assert len(set(_[2] for _ in walk)) == len(walk)

def test_pipeline_rejects_identity_maps():
	family = families.familyTheorem51(verify=False)
	ident  = FracLinMap.Identity("z")
	with pytest.raises(FamilyError, match="distinct modulo squares"):
		families.remark52Pipeline(family.lambdas[0], family.lambdas[1], ident, ident, family.T)

def test_pipeline_rejects_non_permuting_maps():
	family = families.familyTheorem51(verify=False)
	shift  = FracLinMap(1, 1, 0, 1, "z")
	with pytest.raises(FamilyError, match="permute"):
		families.remark52Pipeline(family.lambdas[0], family.lambdas[1], shift, family.maps[1], family.T)

# -----------------------------------------------------------------------------
#
# SYMBOLIC IDENTITIES
#
# -----------------------------------------------------------------------------

@pytest.mark.parametrize("builder", [families.familyTheorem51, families.familyTheorem53])
def test_symbolic_families( builder ):
	family = builder()
	assert family.verified
	assert all(holds for _, holds in family.identityChecks())
	assert family.independence() == [True, True]
	assert family.genusBound() == 5

@pytest.mark.slow
def test_pipeline_theorem51():
	report = families.pipelineTheorem51()
	assert all(report.kMatchesMap)
	assert all(report.rootIdentities)
	assert report.relationHolds
	assert all(report.printedPointHolds)
	assert report.twistMatches
	assert report.family.verify().verified
	assert len(report.lines()) >= 6

@pytest.mark.slow
def test_pipeline_theorem53():
	report = families.pipelineTheorem53()
	assert report.relationHolds
	assert report.twistMatches
	assert report.family.verify().verified

@pytest.mark.slow
def test_custom_family():
	base   = families.familyTheorem51(verify=False)
	family = families.customFamily(
		base.lambdas[0], base.lambdas[1],
		base.maps[0].asRatFunc(), base.maps[1].asRatFunc(), base.T
	)
	assert family.verified
	assert family.name == "custom"

def test_family_by_name_verifies():
	family = families.familyByName("thm51")
	assert family.name == "thm51" and family.verified

# -----------------------------------------------------------------------------
#
# GENERATOR
#
# -----------------------------------------------------------------------------

def test_cross_check_orders():
	cube   = WeierstrassCurve.Short(0, 1)
	orders = [
		mazurInfiniteOrder(E37, P37), mazurInfiniteOrder(E37, E37.double(P37)),
		mazurInfiniteOrder(cube, ProjPoint(F(2), F(3))), mazurInfiniteOrder(cube, ProjPoint(F(0), F(1))),
	]
	checks = families.crossCheckOrders([E37, cube], orders, [7, 11])
	assert [_.label() for _ in checks] == ["InfiniteOrder", "InfiniteOrder", "TorsionOfOrder(6)", "TorsionOfOrder(3)"]
	assert all(_.method == certify.METHOD_MODP and _.witnesses == [7, 11] for _ in checks)
	orders[1] = certify.OrderCertificate(orders[1].point, certify.TORSION, 5)
	with pytest.raises(families.IdentityFailure):
		families.crossCheckOrders([E37, cube], orders)

@pytest.fixture(scope="module")
def records():
	return list(families.generateTwists(F(2), 3))

@pytest.mark.slow
def test_generate_twists( records ):
	spec = families.familyTheorem51(2, verify=False)
	assert len(records) == 3
	for record in records:
		assert record.isCertified()
		assert record.u * record.u == spec.quarticValue(record.t)
		assert record.dRaw == spec.twistValue(record.t)
		assert record.t != 0
		assert record.recheck() == []
	for i, a in enumerate(records):
		for b in records[i + 1:]:
			assert not factor.isRationalSquare(a.dRaw / b.dRaw)

@pytest.mark.slow
def test_record_round_trip( records ):
	for record in records:
		again = families.TwistRecord.FromDict(json.loads(json.dumps(record.asDict())))
		assert again.recheck() == []
		assert again.asDict() == record.asDict()

@pytest.mark.slow
def test_record_tamper_family( records ):
	def tampered( **values ):
		record = families.TwistRecord.FromDict(records[0].asDict())
		for key, value in values.items():
			setattr(record, key, value)
		return record.recheck()
	assert "d_raw != g(t)" in tampered(dRaw=records[0].dRaw * 4)
	failures = tampered(alpha=F(3))
	assert "quartic is not C_alpha" in failures and "d_raw != g(t)" in failures
	assert any(_.startswith("curve lambdas") for _ in tampered(family="thm53"))
	assert tampered(family="custom") == ["family custom cannot be rebuilt from the record alone"]
	record = families.TwistRecord.FromDict(records[0].asDict())
	assert record.recheck(families.familyTheorem51(verify=False)) == []
	assert record.recheck(families.familyTheorem53(verify=False)) == ["record family thm51 is not thm53"]

@pytest.mark.slow
def test_record_tamper( records ):
	record = families.TwistRecord.FromDict(records[0].asDict())
	p      = record.points[0]
	record.points[0] = ProjPoint(p.x, p.y + 1)
	assert record.recheck()
	record = families.TwistRecord.FromDict(records[0].asDict())
	record.u = record.u + 1
	assert "u^2 != q(t)" in record.recheck()

def test_record_schema():
	from twistcert.serialize import SchemaError
	with pytest.raises(SchemaError):
		families.TwistRecord.FromDict({"family": "thm51"})

# EOF - vim: tw=80 ts=4 sw=4 noet
