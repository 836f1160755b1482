// Copyright 2026 The evkb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EVKB_ANNOTATE_ROLES_HPP_
#define EVKB_ANNOTATE_ROLES_HPP_

#include <optional>
#include <vector>

#include "evkb/annotate/predicates.hpp"
#include "evkb/annotate/types.hpp"

namespace evkb::annotate {

// Positional stand-in for semantic role labelling.
//
// Active verbs take the nearest entity on the left as subject and the
// nearest on the right as object. Passive verbs (be + past participle) take
// the "by" agent as subject and the left entity as object. Noun predicates
// use "X's acquisition of Y" / "acquisition of Y by X". A pronoun or
// relative word between the left entity and the predicate means the subject
// is not expressed in the sentence, and the attempt fails.
//
// The argument window runs from the predicate to the next clause break
// (, ; : ! ? parentheses, dashes). A value is in the correct argument when it
// sits in that window right after the predicate or the object, or is
// introduced by "for", "at" or "worth"; noun predicates also accept a value
// directly in front ("$10.3 billion acquisition"). A date is in the correct
// argument when it lies in the predicate's clause.
//
// Returns nullopt when no value is present, fewer than two distinct
// entities take part, or `enforce_semantic_roles` is set and no value is in
// the correct argument. predicate_class and predicate_frequency are left
// for the caller.
std::optional<AnnotatedSentence> assign_roles(const TokenizedSentence& sentence,
                                              const SentenceContext& context,
                                              const std::vector<EntityMention>& mentions,
                                              const PredicateToken& predicate,
                                              const std::vector<MonetaryValue>& values,
                                              const std::vector<DateMention>& dates,
                                              bool enforce_semantic_roles);

}  // namespace evkb::annotate

#endif  // EVKB_ANNOTATE_ROLES_HPP_
