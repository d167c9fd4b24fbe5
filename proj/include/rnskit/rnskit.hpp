#pragma once

// Umbrella header: residue number system arithmetic, mixed-radix
// machinery, the residue-to-binary converter family, and the
// differential verification harness.

#include "rnskit/constants.hpp"
#include "rnskit/converters.hpp"
#include "rnskit/errors.hpp"
#include "rnskit/mrs.hpp"
#include "rnskit/numtheory.hpp"
#include "rnskit/rns.hpp"
#include "rnskit/special.hpp"
#include "rnskit/verify.hpp"
