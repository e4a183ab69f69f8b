# Encoding: utf8
from   fractions import Fraction
import pytest
from   twistcert import factor

def test_kernel_small():
	assert factor.squareFreeKernelInt(72)  == (2, 6, True)
	assert factor.squareFreeKernelInt(-50) == (-2, 5, True)
	assert factor.squareFreeKernelInt(1)   == (1, 1, True)
	assert factor.squareFreeKernelInt(-1)  == (-1, 1, True)

def test_kernel_zero():
	with pytest.raises(ValueError):
		factor.squareFreeKernelInt(0)

def test_kernel_beyond_trial_division():
	p = 1000003
	kernel, cofactor, complete = factor.squareFreeKernelInt(3 * p * p, trialBound=1000)
	assert (kernel, cofactor, complete) == (3, p, True)

def test_kernel_two_large_primes():
	p, q = 1000003, 1000033
	kernel, cofactor, complete = factor.squareFreeKernelInt(p * q * 4, trialBound=1000)
	assert complete
	assert kernel * cofactor ** 2 == p * q * 4
	assert kernel == p * q

def test_kernel_rational():
	assert factor.squareFreeKernelRat(Fraction(-25, 9)) == (-1, Fraction(5, 3), True)
	kernel, scale, complete = factor.squareFreeKernelRat(Fraction(3, 8))
	assert (kernel, scale, complete) == (6, Fraction(1, 4), True)
	assert kernel * scale ** 2 == Fraction(3, 8)

def test_kernel_invariance_under_squares( rng ):
	for _ in range(200):
		n = rng.randint(1, 10 ** 6) * rng.choice((1, -1))
		s = rng.randint(1, 10 ** 4)
		assert factor.squareFreeKernelInt(n * s * s)[0] == factor.squareFreeKernelInt(n)[0]

def test_rational_roots():
	assert factor.rationalSqrt(Fraction(49, 4)) == Fraction(7, 2)
	assert factor.rationalSqrt(Fraction(-4))    is None
	assert factor.rationalRoot(Fraction(-27, 8), 3) == Fraction(-3, 2)
	assert factor.isRationalSquare(Fraction(2)) is False
	assert factor.isSquarefreeInt(30)
	assert not factor.isSquarefreeInt(12)

# EOF - vim: tw=80 ts=4 sw=4 noet
