# Encoding: utf8
import warnings
from   fractions import Fraction as F
import pytest
from   twistcert import certify, serialize
from   twistcert.eccore import ProjPoint, WeierstrassCurve, LegendreCurve, TwistedCurve
from   twistcert.symalg import QuadExtElem, variable

E37  = WeierstrassCurve(0, 0, 1, -1, 0)
P37  = ProjPoint(F(0), F(0))
E389 = WeierstrassCurve(0, 1, 1, -2, 0)
CUBE = WeierstrassCurve.Short(0, 1)

def point( x, y ):
	return ProjPoint(F(x), F(y))

def test_torsion_orders():
	for p, order in (((2, 3), 6), ((0, 1), 3), ((-1, 0), 2)):
		cert = certify.mazurInfiniteOrder(CUBE, point(*p))
		assert not cert.isInfinite()
		assert cert.order == order
		assert cert.label() == "TorsionOfOrder({0})".format(order)
	assert certify.mazurInfiniteOrder(CUBE, ProjPoint()).order == 1

def test_infinite_order():
	cert = certify.mazurInfiniteOrder(E37, P37)
	assert cert.isInfinite()
	assert cert.witnesses == list(certify.MAZUR_ORDERS)
	assert cert.label() == "InfiniteOrder"

def test_nagell_lutz():
	curve = WeierstrassCurve.Short(0, -2)
	p     = point(3, 5)
	twice = curve.double(p)
	assert twice.x == F(129, 100)
	assert certify.nagellLutzInfiniteOrder(curve, p) is None
	cert = certify.nagellLutzInfiniteOrder(curve, twice)
	assert cert.isInfinite() and cert.method == certify.METHOD_NAGELL_LUTZ
	assert certify.mazurInfiniteOrder(curve, p, exhaustive=False).isInfinite()

def test_modp_bound():
	assert certify.pointCount(CUBE, 5) == 6
	assert certify.pointCount(CUBE, 7) == 12
	assert certify.modpTorsionBound(CUBE, [5, 7, 11]) == 6
	# 2 and 3 are rejected, as 3 divides the discriminant
	assert certify.modpTorsionBound(CUBE, [2, 3, 5]) == 6
	with pytest.raises(certify.CertifyError):
		certify.modpTorsionBound(CUBE, [2, 3])
	with pytest.raises(certify.CertifyError):
		certify.modpTorsionBound(WeierstrassCurve.Short(F(1, 2), 1), [5])

def test_point_count_is_warning_free():
	with warnings.catch_warnings():
		warnings.simplefilter("error")
		assert certify.pointCount(CUBE, 11) == 12

def test_modp_certificates():
	assert certify.modpInfiniteOrder(E37, P37).isInfinite()
	cert = certify.modpInfiniteOrder(CUBE, point(2, 3))
	assert cert.order == 6 and cert.method == certify.METHOD_MODP

def test_modp_agrees_with_mazur():
	cases = [
		(E37, P37), (E37, E37.mul(3, P37)), (E389, point(-1, 1)),
		(CUBE, point(0, 1)), (CUBE, point(2, 3)),
		# 11a3 and 26b1 have rational 5 and 7 torsion
		(WeierstrassCurve(0, -1, 1, 0, 0), point(0, 0)),
		(WeierstrassCurve(1, -1, 1, -3, 3), point(1, 0)),
	]
	orders = []
	for curve, p in cases:
		mazur = certify.mazurInfiniteOrder(curve, p)
		modp  = certify.modpInfiniteOrder(curve, p)
		assert modp.sameVerdict(mazur)
		orders.append(mazur.order)
	assert orders == [None, None, None, 3, 6, 5, 7]

def test_height_is_quadratic():
	for curve, p in ((E37, P37), (E389, point(-1, 1))):
		h = certify.canonicalHeightEstimate(curve, p, doublings=6)
		assert h > 0
		for n in (2, 3, 4):
			ratio = certify.canonicalHeightEstimate(curve, curve.mul(n, p), doublings=6) / (n * n * h)
			assert abs(ratio - 1) < 0.05

def test_relation_scan_monotone():
	final = []
	for curve, p1, p2 in ((E37, P37, E37.double(P37)), (CUBE, point(2, 3), point(0, 1))):
		previous = set()
		for bound in (1, 2, 3):
			found = set(tuple(_) for _ in certify.relationScan(curve, p1, p2, bound).relations)
			assert previous <= found
			assert all(max(abs(a), abs(b)) <= bound for a, b, _ in found)
			assert set(_ for _ in found if max(abs(_[0]), abs(_[1])) < bound) == previous
			previous = found
		final.append(previous)
	assert final[0] == set([(2, -1, 1)])
	assert len(final[1]) == len([(a, b) for a in range(4) for b in range(-3, 4) if a or b > 0])

def test_function_field_multiples_are_dependent():
	t     = variable("t")
	q     = t ** 3 - t
	curve = TwistedCurve.Legendre(-1)
	p     = ProjPoint(QuadExtElem(t, 0, q), QuadExtElem(0, 1, q))
	twice = curve.double(p)
	assert curve.isOnCurve(twice)
	assert twice.x.isScalar() and not twice.y.isScalar()
	assert not certify.verifyFunctionFieldIndependence(curve, p, twice)
	torsion = ProjPoint(QuadExtElem(0, 0, q), QuadExtElem(0, 0, q))
	assert not certify.verifyFunctionFieldIndependence(curve, p, curve.add(p, torsion))

def test_legendre_full_two_torsion():
	for lam in range(2, 52):
		mapping = LegendreCurve(lam).integralShortModel()
		short   = mapping.target
		primes  = certify.goodPrimes(short)
		assert len(primes) == 3 and min(primes) >= 7
		bound   = certify.modpTorsionBound(short, primes)
		assert bound % 4 == 0
		for x in (0, 1, lam):
			cert = certify.mazurInfiniteOrder(short, mapping.forward(point(x, 0)))
			assert cert.order == 2 and bound % cert.order == 0

def test_relation_scan():
	report = certify.relationScan(E37, P37, E37.double(P37), 3)
	assert report.verdict == certify.RELATION
	assert report.relations == [(2, -1, 1)]
	assert report.label() == "RelationFound(2,-1)"
	assert not report.isIndependent()

def test_regulator_independent():
	report = certify.regulatorEvidence(E389, point(-1, 1), point(0, 0))
	assert report.relations == []
	assert report.isIndependent()
	assert report.regulator > 0.05
	assert set(report.heights) == set(("h1", "h2", "h12", "pairing"))

def test_regulator_digit_budget():
	report = certify.regulatorEvidence(E389, point(-1, 1), point(0, 0), digitBudget=5)
	assert report.verdict == certify.INCONCLUSIVE
	assert "digits" in report.reason

def test_certificate_dicts():
	cert = certify.mazurInfiniteOrder(CUBE, point(2, 3))
	assert certify.OrderCertificate.FromDict(cert.asDict()).sameVerdict(cert)
	report = certify.regulatorEvidence(E389, point(-1, 1), point(0, 0))
	again  = certify.IndependenceReport.FromDict(report.asDict())
	assert again.verdict == report.verdict
	assert again.points == list(report.points)
	with pytest.raises(serialize.SchemaError):
		certify.IndependenceReport.FromDict({"points": []})
	with pytest.raises(serialize.SchemaError):
		certify.OrderCertificate.FromDict({"verdict": "InfiniteOrder"})

def test_worker_pool():
	tasks = [
		("order", (E37, P37)),
		("order", (CUBE, point(2, 3))),
		("modp",  (CUBE, point(0, 1))),
		("independence", (E389, point(-1, 1), point(0, 0))),
	]
	serial   = certify.certifyPoints(tasks, workers=1)
	parallel = certify.certifyPoints(tasks, workers=2)
	assert [_.label() for _ in serial] == [_.label() for _ in parallel]
	assert [_.label() for _ in serial][:3] == ["InfiniteOrder", "TorsionOfOrder(6)", "TorsionOfOrder(3)"]
	with pytest.raises(certify.CertifyError):
		certify.runTask(("unknown", ()))

# EOF - vim: tw=80 ts=4 sw=4 noet
