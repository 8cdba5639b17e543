import six.x, kazoo, numpy.core
from matplotlib.core import *
