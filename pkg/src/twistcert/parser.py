#!/usr/bin/env python
# Encoding: utf8
# -----------------------------------------------------------------------------
# Project   : TwistCert
# -----------------------------------------------------------------------------
# Author    : TwistCert contributors
# -----------------------------------------------------------------------------
# License   : GNU Lesser General Public License
# -----------------------------------------------------------------------------
# Creation  : 03-Oct-2026
# Last mod  : 15-Oct-2026
# -----------------------------------------------------------------------------

import re
from   fractions import Fraction
from   twistcert.symalg import SymAlgError, FIELD, VARIABLES, ALIASES, lift, normalize, render

__doc__ = """\
A small recursive descent parser for the arithmetic expressions the command
line accepts: integer literals, the variables 't, u, alpha (or α), z, T, x',
the '+ - * /' operators, integer powers with '^' (or '**') and parentheses.

>>> parseExpr("x*(x-1)*(x-2)")
>>> parseExpr("(-25)/9")

Constants come back as 'Fraction', polynomials as MPoly and everything else
as RatFunc.
"""

RE_TOKEN   = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_α][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()−·×]))")
RE_SPACES  = re.compile(r"\s*$")
OPERATORS  = {"−": "-", "·": "*", "×": "*", "**": "^"}

class ParseError(SymAlgError):

	def __init__( self, message, offset ):
		SymAlgError.__init__(self, "{0} at offset {1}".format(message, offset))
		self.offset = offset

# -----------------------------------------------------------------------------
#
# TOKENIZER
#
# -----------------------------------------------------------------------------

def tokenize( src ):
	"""Returns the list of '(kind, value, offset)' tokens of the given source,
	terminated by an 'end' token."""
	tokens = []
	offset = 0
	while not RE_SPACES.match(src, offset):
		m = RE_TOKEN.match(src, offset)
		if not m:
			skipped = len(src) - len(src[offset:].lstrip())
			raise ParseError("Unexpected character {0!r}".format(src[skipped]), skipped)
		start = m.start(m.lastgroup)
		kind  = m.lastgroup
		value = m.group(kind)
		if kind == "op":
			value = OPERATORS.get(value, value)
		elif kind == "name":
			value = ALIASES.get(value, value)
			if value not in VARIABLES:
				raise ParseError("Unknown variable {0!r}".format(m.group(kind)), start)
		tokens.append((kind, value, start))
		offset = m.end()
	tokens.append(("end", None, len(src)))
	return tokens

# -----------------------------------------------------------------------------
#
# PARSER
#
# -----------------------------------------------------------------------------

class Parser:
	"""Parses the grammar

	>   expr  := term   (('+'|'-') term)*
	>   term  := unary  (('*'|'/') unary)*
	>   unary := ('+'|'-') unary | power
	>   power := atom ('^' ['-'] NUMBER)?
	>   atom  := NUMBER | NAME | '(' expr ')'

	building values of the rational function field as it goes."""

	def __init__( self, src ):
		self.src    = src
		self.tokens = tokenize(src)
		self.index  = 0

	def peek( self ):
		return self.tokens[self.index]

	def next( self ):
		token = self.tokens[self.index]
		self.index += 1
		return token

	def isOp( self, *ops ):
		kind, value, _ = self.peek()
		return kind == "op" and value in ops

	def expect( self, op ):
		kind, value, offset = self.next()
		if kind != "op" or value != op:
			raise ParseError("Expected {0!r}".format(op), offset)

	def parse( self ):
		value = self.parseExpr()
		kind, _, offset = self.peek()
		if kind != "end":
			raise ParseError("Unexpected token", offset)
		return value

	def parseExpr( self ):
		value = self.parseTerm()
		while self.isOp("+", "-"):
			_, op, _ = self.next()
			rhs = self.parseTerm()
			value = value + rhs if op == "+" else value - rhs
		return value

	def parseTerm( self ):
		value = self.parseUnary()
		while self.isOp("*", "/"):
			_, op, offset = self.next()
			rhs = self.parseUnary()
			if op == "*":
				value = value * rhs
			elif not rhs:
				raise ParseError("Division by the zero polynomial", offset)
			else:
				value = value / rhs
		return value

	def parseUnary( self ):
		if self.isOp("-"):
			self.next()
			return -self.parseUnary()
		if self.isOp("+"):
			self.next()
			return self.parseUnary()
		return self.parsePower()

	def parsePower( self ):
		value = self.parseAtom()
		if self.isOp("^"):
			self.next()
			sign = 1
			if self.isOp("-"):
				self.next()
				sign = -1
			parens = self.isOp("(")
			if parens: self.next()
			if parens and self.isOp("-"):
				self.next()
				sign = -sign
			kind, exponent, offset = self.next()
			if kind != "number":
				raise ParseError("Expected an integer exponent", offset)
			if parens: self.expect(")")
			exponent = sign * int(exponent)
			if exponent < 0 and not value:
				raise ParseError("Division by the zero polynomial", offset)
			value = lift(1) if exponent == 0 else value ** exponent
		return value

	def parseAtom( self ):
		kind, value, offset = self.next()
		if kind == "number":
			return lift(int(value))
		elif kind == "name":
			return FIELD.gens[VARIABLES.index(value)]
		elif kind == "op" and value == "(":
			res = self.parseExpr()
			self.expect(")")
			return res
		elif kind == "end":
			raise ParseError("Unexpected end of expression", offset)
		else:
			raise ParseError("Unexpected {0!r}".format(value), offset)

def parseExpr( src ):
	"""Parses the given expression, returning a 'Fraction', an MPoly or a
	RatFunc."""
	return normalize(Parser(src).parse())

def parseRatFunc( src ):
	"""Like 'parseExpr', but always returns a RatFunc."""
	return Parser(src).parse()

def parseRat( src ):
	"""Parses an exact rational such as '-25/9', as found in certificates and
	on the command line."""
	value = parseExpr(str(src))
	if not isinstance(value, Fraction):
		raise ParseError("Expected a rational constant, got {0}".format(render(value)), 0)
	return value

# EOF - vim: tw=80 ts=4 sw=4 noet
