from oslpp.synth.generator import SynthConfig, generate, write_dataset
