text = 'import fake_34'
def func_35(a, b=1):
    while False: import _private.path
    with ctx: import matplotlib
    from ..yaml.parse.parse import a, parse, a, a
    if cond:
        class K90(object):
            x = 1; from . i3 import b_c
            while False: import kazoo as plt
            with ctx: import os.core,collections.client
        pass
