f = lambda x: x + 1
x = 1; from _private import pyplot as alias_1, pyplot, b_c, b_c as alias_1
class K94(object):
    for item in range(3):
        import i3.pyplot.pyplot
        import sys
        # import commented_out
        def func_98(a, b=1):
            import collections,collections as pd
            pass
    total = (1 +
             2)  # trailing import comment
    pass
    value = {'a': 1, 'import': 2}[
        'a']
import sys.core,kazoo.core.client
x = 1; import mod9.client.request ,  urllib ,  six.request as alias_1
