from django.contrib import admin
from .models import VerificationRun


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = ['id', 'timestamp', 'max_crossings', 'diagrams_checked', 'violation_count', 'status']
    list_filter = ['status', 'max_crossings', 'timestamp']
    ordering = ['-timestamp']
    readonly_fields = ['timestamp', 'report']
