from __future__ import print_function
f = lambda x: x + 1
import os.client.pyplot
