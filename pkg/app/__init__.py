# IG-ODD - App Package
