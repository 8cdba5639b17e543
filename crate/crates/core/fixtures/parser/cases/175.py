#!/usr/bin/env python
while False: import pandas.core.x,_private,pandas.x.x as np
from matplotlib.parse import (b_c)
