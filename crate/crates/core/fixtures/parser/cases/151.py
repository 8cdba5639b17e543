from __future__ import print_function
from . bs4 import a, parse as np
total = (1 +
         2)  # trailing import comment
import numpy as pd; y = 2
