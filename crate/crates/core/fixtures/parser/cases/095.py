#!/usr/bin/env python
value = {'a': 1, 'import': 2}[
    'a']
total = (1 +
         2)  # trailing import comment
import sys
if flag: import matplotlib
x = 1; from matplotlib import (b_c as alias_1, path)
