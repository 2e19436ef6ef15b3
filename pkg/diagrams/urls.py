"""
URL routing dla diagramów.
"""
from django.urls import path
from . import views

app_name = 'diagrams'

urlpatterns = [
    path('summary/', views.diagram_summary, name='summary'),
    path('checkpoly/', views.check_polynomial, name='checkpoly'),
]
