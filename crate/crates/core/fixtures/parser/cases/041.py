from matplotlib import x, path
import os
