# IG-ODD - Routers Package (un subcomando por módulo)
from app.routers import convert, nbhd, comp, graph, verify
