f = lambda x: x + 1
import i3
from collections.client.parse import *
pass
