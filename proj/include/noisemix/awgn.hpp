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

#ifndef NOISEMIX_AWGN_HPP_
#define NOISEMIX_AWGN_HPP_

#include "noisemix/rng.hpp"
#include "noisemix/types.hpp"

namespace noisemix {

// Adds i.i.d. zero-mean Gaussian noise with standard deviation
// target_noise_rms(rms(signal), target).  The signal itself is not
// normalized or rescaled.  A silent (all-zero) input yields zero noise
// standard deviation and is returned unchanged.  Fully determined by seed.
AudioBuffer add_white_noise(const AudioBuffer& signal, SnrDb target, Seed seed);

}  // namespace noisemix

#endif  // NOISEMIX_AWGN_HPP_
