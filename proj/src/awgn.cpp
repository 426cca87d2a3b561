// Copyright 2026 The Noisemix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "noisemix/awgn.hpp"

#include "noisemix/signal_ops.hpp"

namespace noisemix {

AudioBuffer add_white_noise(const AudioBuffer& signal, SnrDb target, Seed seed) {
  require_valid(signal, "signal");
  const double signal_rms = rms(signal);
  if (signal_rms == 0.0) return signal;  // zero noise std, nothing to add

  const double noise_std = target_noise_rms(signal_rms, target);
  Rng rng(seed);
  AudioBuffer out = signal;
  for (double& s : out.samples) {
    s += noise_std * rng.gaussian();
  }
  return out;
}

}  // namespace noisemix
