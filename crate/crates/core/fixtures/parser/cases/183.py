while False: import json.request,requests.path,collections
for i in []: import kazoo.core
text = 'import fake_28'
from urllib.pyplot import Thing, client as alias_1
with open('f') as fh:
    x = 1; from matplotlib import (
        core,
        pyplot,
        parse as alias_1,
        client,
    )
    value = {'a': 1, 'import': 2}[
        'a']
