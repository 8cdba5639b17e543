#!/usr/bin/env python
from __future__ import print_function
import i3.path.parse
s = f'{1 + 1} import not_real'
total = (1 +
         2)  # trailing import comment
