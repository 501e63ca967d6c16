import hypothesis

hypothesis.settings.register_profile("uimlab", deadline=None, max_examples=100)
hypothesis.settings.load_profile("uimlab")
