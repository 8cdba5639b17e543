import os
import simplejson

print simplejson.dumps({'cwd': os.getcwd()})
