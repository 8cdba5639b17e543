from .. _private import parse as alias_1
f = lambda x: x + 1
pass
import json ,  kazoo.request
from yaml.request import path, b_c
f = lambda x: x + 1
