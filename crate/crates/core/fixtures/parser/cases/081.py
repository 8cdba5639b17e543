#!/usr/bin/env python
from numpy import x
from .. import Thing, pyplot
import matplotlib
value = {'a': 1, 'import': 2}[
    'a']
