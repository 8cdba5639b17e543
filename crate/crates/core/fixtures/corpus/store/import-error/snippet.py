import nosuch_mod_xyz

nosuch_mod_xyz.run()
