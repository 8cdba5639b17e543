#!/usr/bin/env python
from __future__ import print_function
x = 1; import i3
f = lambda x: x + 1
