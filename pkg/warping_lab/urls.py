"""
URL configuration for warping_lab project.

The `urlpatterns` list routes URLs to views. For more information please see:
    https://docs.djangoproject.com/en/6.0/topics/http/urls/
"""
from django.contrib import admin
from django.urls import path, include
from . import views

urlpatterns = [
    path('admin/', admin.site.urls),
    path('runs/', views.run_list, name='run_list'),
    path('runs/<int:run_id>/', views.run_detail, name='run_detail'),
    path('diagrams/', include('diagrams.urls')),
    path('analysis/', include('analysis.urls')),
]
