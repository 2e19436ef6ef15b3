from django.urls import path
from . import views

app_name = 'analysis'

urlpatterns = [
    path('verify/', views.verify, name='verify'),
]
