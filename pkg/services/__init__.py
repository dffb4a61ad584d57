# Elimination services
