# Encoding: utf8
from   fractions import Fraction
import pytest
from   twistcert import symalg
from   twistcert.symalg import (
	FracLinMap, QuadExtElem, PoleError, DegenerateMap, ModulusMismatch,
	SymAlgError, variable, lift, compose, evaluate, evaluateRat
)

t, u, z, alpha = [variable(_) for _ in ("t", "u", "z", "alpha")]

def test_lift_and_normalize():
	assert symalg.normalize(lift(Fraction(3, 4))) == Fraction(3, 4)
	assert symalg.isPolynomial(t ** 2 + 1)
	assert not symalg.isPolynomial(1 / t)
	assert symalg.usedVariables((t + alpha) / z) == ["t", "alpha", "z"]
	with pytest.raises(SymAlgError):
		symalg.toRat(t)

def test_degree_and_coefficients():
	p = symalg.asPoly(alpha * t ** 3 + 2 * t + 5)
	assert symalg.degreeIn(p, "t") == 3
	assert symalg.coeffIn(p, "t", 3) == symalg.asPoly(alpha)
	assert symalg.degreeIn(symalg.asPoly(lift(0)), "t") == -1

def test_gcd():
	g = symalg.polyGCD(t ** 2 - 1, (t - 1) ** 2)
	assert g == symalg.asPoly(t - 1)
	g = symalg.polyGCD(2 * t ** 2 - 2, 4 * t + 4)
	assert g == symalg.asPoly(t + 1)

def test_squarefree_decompose():
	assert symalg.squarefreeDecompose(t ** 3 * (t + 1) ** 2) == (1, symalg.asPoly(t))
	assert symalg.squarefreeDecompose(4 * t ** 2 * (t - 1)) == (1, symalg.asPoly(t - 1))
	assert symalg.squarefreeDecompose(-3 * (t - 1) ** 2 * (t + 2)) == (-3, symalg.asPoly(t + 2))
	assert symalg.squarefreePart((t + 1) / (8 * t ** 3)) == symalg.asPoly(2 * t * (t + 1))
	with pytest.raises(SymAlgError):
		symalg.squarefreePart(lift(0))

def test_squarefree_invariance( rng ):
	for _ in range(500):
		p = sum(rng.randint(-5, 5) * t ** k for k in range(4)) + t ** 4
		s = rng.randint(1, 4) * t + rng.randint(-6, 6) + rng.randint(0, 2) * alpha
		assert symalg.sameSquareClass(p * s * s, p)
		assert symalg.squarefreePart(p * s * s) == symalg.squarefreePart(p)

def test_square_roots():
	value = (t + 1) ** 2 / (4 * t ** 4)
	root  = symalg.ratfuncSqrt(value)
	assert root * root == value
	assert symalg.ratfuncSqrt(2 * t ** 2) is None
	assert symalg.isSquare(9 * (alpha - 1) ** 2 / 4)
	assert not symalg.sameSquareClass(t, 2 * t)
	assert symalg.isSquarefree(t ** 3 - t)
	assert not symalg.isSquarefree(t ** 2 * (t - 1))

def test_compose_and_evaluate():
	assert compose(t ** 2 + 1, "t", 1 / z) == (1 + z ** 2) / z ** 2
	assert evaluate((t + alpha) / (t - 2), {"alpha": 3}) == (t + 3) / (t - 2)
	assert evaluateRat((t + alpha) / (t - 2), {"alpha": 3, "t": Fraction(1, 2)}) == Fraction(-7, 3)
	with pytest.raises(PoleError):
		evaluate(1 / (t - 2), {"t": 2})
	with pytest.raises(PoleError):
		compose(1 / (t - 1), "t", lift(1))

def test_fraclin_maps():
	h = FracLinMap(2, 0, 3, -2, "z")
	assert h.determinant() == lift(-4)
	assert h(Fraction(1)) == lift(2)
	assert h.permutes([0, 1, 2])
	assert not FracLinMap(1, 1, 0, 1, "z").permutes([0, 1, 2])
	assert FracLinMap.FromRatFunc(h.asRatFunc(), "z").asRatFunc() == h.asRatFunc()
	assert FracLinMap.Identity("z")(t) == t
	with pytest.raises(DegenerateMap):
		FracLinMap(1, 1, 1, 1, "z")(Fraction(2))
	with pytest.raises(PoleError):
		h(Fraction(2, 3))
	with pytest.raises(SymAlgError):
		FracLinMap(z, 0, 0, 1, "z")

def test_compose_fraclin():
	f = z * (z - 1) * (z - 2)
	h = FracLinMap(2, 0, 3, -2, "z")
	assert symalg.composeFracLin(f, h) == compose(f, "z", h.asRatFunc())
	assert symalg.rootPermutationIdentity(f, h)
	assert not symalg.rootPermutationIdentity(f, FracLinMap.Identity("z"))

def test_root_permutation_rational_coefficients():
	lam = -(alpha ** 2 + 1) ** 2 / (alpha ** 2 - 1) ** 2
	f   = z * (z - 1) * (z - lam)
	h   = FracLinMap(lam, 0, lam + 1, -lam, "z")
	assert h.permutes([0, 1, lam])
	assert symalg.rootPermutationIdentity(f, h)
	assert symalg.rootPermutationIdentity(2 * f / alpha, h)
	assert symalg.rootPermutationIdentity(f, FracLinMap(1, -lam, 2 - lam, -1, "z"))
	assert not symalg.rootPermutationIdentity(f, FracLinMap(1, 1, 1, 2, "z"))
	with pytest.raises(SymAlgError):
		symalg.rootPermutationIdentity(f / (z + 1), h)

def test_extension_ring_laws( rng ):
	q = alpha ** 2 * t ** 4 - (alpha ** 2 + 1) ** 2 * t ** 2 + 4 * alpha ** 2
	def element():
		a, b = [sum(rng.randint(-3, 3) * t ** k for k in range(3)) + rng.randint(-2, 2) * alpha for _ in range(2)]
		return QuadExtElem(a, b / (t + rng.randint(1, 3)), q)
	for _ in range(100):
		x, y, w = element(), element(), element()
		assert (x + y) + w == x + (y + w)
		assert (x * y) * w == x * (y * w)
		assert x * (y + w) == x * y + x * w
		assert x * y == y * x
		assert (x * y).conjugate() == x.conjugate() * y.conjugate()

def test_extension_arithmetic():
	q  = t ** 2 + 1
	uu = QuadExtElem(0, 1, q)
	assert uu * uu == q
	assert (1 + uu) * (1 - uu) == 1 - q
	x = 2 + uu
	assert x * x.inverse() == 1
	assert x / x == 1
	assert x.conjugate() == 2 - uu
	assert x.norm() == 4 - q
	assert QuadExtElem.FromRatFunc(u ** 3, q) == QuadExtElem(0, q, q)
	assert QuadExtElem.FromRatFunc(1 / u, q) == QuadExtElem(0, 1 / q, q)
	assert x ** 2 == x * x
	assert x ** -1 == x.inverse()
	assert x.evaluate({"t": 0}, 1) == 3
	assert not QuadExtElem(0, 0, q)

def test_extension_modulus_mismatch():
	with pytest.raises(ModulusMismatch):
		QuadExtElem(1, 1, t ** 2 + 1) + QuadExtElem(1, 1, t)
	with pytest.raises(SymAlgError):
		QuadExtElem(1, 1, u + 1)

def test_square_class_in_extension():
	q    = t ** 2 + 1
	root = symalg.squareClassInExtension(4 / q, q)
	assert root * root == 4 / q
	assert not root.isScalar()
	root = symalg.squareClassInExtension((t - 1) ** 2, q)
	assert root.isScalar()
	assert symalg.squareClassInExtension(t, q) is None

# EOF - vim: tw=80 ts=4 sw=4 noet
