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
# Last mod  : 16-Oct-2026
# -----------------------------------------------------------------------------

import logging, math
from   fractions import Fraction
from   sympy import isprime, perfect_power, pollard_rho, primerange, integer_nthroot

__doc__ = """\
Square-free kernels of (potentially large) integers and rationals. The
reduction is trial division up to a bound, followed by primality tests,
perfect power detection and a budgeted Pollard rho. When the budget runs out
the reduction is reported as incomplete and the leftover cofactor is kept in
the kernel as is.
"""

DEFAULT_TRIAL_BOUND = 10 ** 6
DEFAULT_RHO_BUDGET  = 10 ** 6
RHO_RETRIES         = 2

# -----------------------------------------------------------------------------
#
# ROOTS
#
# -----------------------------------------------------------------------------

def rationalRoot( value, n ):
	"""Returns the rational 'n'-th root of the value, or None when it is not an
	exact power."""
	value = Fraction(value)
	sign  = 1
	if value < 0:
		if n % 2 == 0: return None
		sign, value = -1, -value
	num, numExact = integer_nthroot(value.numerator,   n)
	den, denExact = integer_nthroot(value.denominator, n)
	if not (numExact and denExact):
		return None
	return sign * Fraction(int(num), int(den))

def rationalSqrt( value ):
	return rationalRoot(value, 2)

def isRationalSquare( value ):
	return rationalSqrt(value) is not None

# -----------------------------------------------------------------------------
#
# KERNELS
#
# -----------------------------------------------------------------------------

def _splitRemainder( m, mult, primes, leftovers, budget, bound ):
	"""Splits 'm', which has no prime factor up to 'bound', accumulating its
	prime factors in 'primes' and what could not be split in 'leftovers'.
	Returns False when a leftover is not proven square-free."""
	if m == 1:
		return True
	if isprime(m):
		primes[m] = primes.get(m, 0) + mult
		return True
	power = perfect_power(m)
	if power:
		base, e = power
		return _splitRemainder(int(base), mult * int(e), primes, leftovers, budget, bound)
	d = pollard_rho(m, retries=RHO_RETRIES, max_steps=budget)
	if d is None or d in (1, m):
		leftovers.append((m, mult))
		# No factor below the bound and not a square: two distinct primes
		return m < bound ** 3
	d = int(d)
	a = _splitRemainder(d,      mult, primes, leftovers, budget, bound)
	b = _splitRemainder(m // d, mult, primes, leftovers, budget, bound)
	return a and b

def _refine( primes, leftovers ):
	"""Makes the leftovers coprime to each other and to the known primes."""
	changed = True
	while changed:
		changed = False
		values  = []
		for value, mult in leftovers:
			for p in primes:
				while value % p == 0:
					value //= p
					primes[p] += mult
			if value > 1:
				values.append([value, mult])
		for i in range(len(values)):
			for j in range(i + 1, len(values)):
				g = math.gcd(values[i][0], values[j][0])
				if g > 1 and not changed:
					vi, mi = values[i]
					vj, mj = values[j]
					values[i] = [vi // g, mi]
					values[j] = [vj // g, mj]
					values.append([g, mi + mj])
					changed = True
		leftovers = [(v, m) for v, m in values if v > 1]
	return leftovers

def squareFreeKernelInt( n, trialBound=DEFAULT_TRIAL_BOUND, rhoBudget=DEFAULT_RHO_BUDGET ):
	"""Returns '(kernel, cofactor, complete)' with 'n == kernel * cofactor^2',
	where 'kernel' carries the sign of 'n'. The 'complete' flag is True when
	the kernel is proven square-free."""
	n = int(n)
	if n == 0:
		raise ValueError("The square-free kernel of zero is undefined")
	sign      = -1 if n < 0 else 1
	m         = abs(n)
	primes    = {}
	leftovers = []
	complete  = True
	exhausted = True
	for p in primerange(2, trialBound + 1):
		if p * p > m:
			exhausted = False
			break
		if m % p == 0:
			e = 0
			while m % p == 0:
				m //= p
				e += 1
			primes[p] = e
	if m > 1:
		if not exhausted or isprime(m):
			primes[m] = primes.get(m, 0) + 1
		else:
			complete = _splitRemainder(m, 1, primes, leftovers, rhoBudget, trialBound)
			leftovers = _refine(primes, leftovers)
	kernel, cofactor = sign, 1
	for p, e in primes.items():
		if e % 2: kernel *= p
		cofactor *= p ** (e // 2)
	for value, mult in leftovers:
		if mult % 2: kernel *= value
		cofactor *= value ** (mult // 2)
	if not complete:
		logging.info("Square-free reduction of {0} incomplete, leftover {1}".format(n, [_ for _, __ in leftovers]))
	return kernel, cofactor, complete

def squareFreeKernelRat( value, trialBound=DEFAULT_TRIAL_BOUND, rhoBudget=DEFAULT_RHO_BUDGET ):
	"""Returns '(kernel, scale, complete)' with 'value == kernel * scale^2',
	'kernel' an integer and 'scale' a 'Fraction'."""
	value = Fraction(value)
	if value == 0:
		raise ValueError("The square-free kernel of zero is undefined")
	kp, cp, okp = squareFreeKernelInt(value.numerator,   trialBound, rhoBudget)
	kq, cq, okq = squareFreeKernelInt(value.denominator, trialBound, rhoBudget)
	# p/q = kp*cp^2/(kq*cq^2) = kp*kq * (cp/(kq*cq))^2
	return kp * kq, Fraction(cp, kq * cq), okp and okq

def isSquarefreeInt( n ):
	kernel, cofactor, complete = squareFreeKernelInt(n)
	return complete and cofactor == 1

# EOF - vim: tw=80 ts=4 sw=4 noet
