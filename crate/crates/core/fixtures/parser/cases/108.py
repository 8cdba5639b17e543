from __future__ import print_function
f = lambda x: x + 1
from collections import *
total = (1 +
         2)  # trailing import comment
