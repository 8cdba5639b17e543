import _private.path ,  json.client as alias_1
from . yaml.pyplot.parse import request
