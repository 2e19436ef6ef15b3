from django.apps import AppConfig


class WarpingLabConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'warping_lab'
