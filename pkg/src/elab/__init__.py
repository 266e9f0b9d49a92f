# Elaboration package
