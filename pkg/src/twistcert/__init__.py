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
# Last mod  : 18-Oct-2026
# -----------------------------------------------------------------------------

__version__ = "1.0.0"

from twistcert.eccore import LegendreCurve, TwistedCurve, WeierstrassCurve, QuarticCurve
from twistcert.families import familyTheorem51, familyTheorem53, generateTwists

# EOF - vim: tw=80 ts=4 sw=4 noet
