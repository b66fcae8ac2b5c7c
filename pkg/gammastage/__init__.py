# -*- coding: utf-8 -*-
"""Degree-counting obstruction theory for partial E-infinity structures on
ring spectra: degree monoids, the Kochman basis, tree complexes and the free
Lie operad, stage bounds and Dyer-Lashof bookkeeping.
"""

__author__ = 'The gammastage developers'
__email__ = 'gammastage@users.noreply.github.com'
__version__ = '0.1.0'
