x = 1; import requests
import requests ,  matplotlib
class K23(object):
    value = {'a': 1, 'import': 2}[
        'a']
    x = 1; import requests.parse as ux
x = 1; import kazoo
